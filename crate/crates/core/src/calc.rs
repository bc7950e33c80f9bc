//! A small expression language over the implemented bases.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer | atom | call | "(" expr ")" | "-" factor
//! atom   := TAG "[" (int ("," int)*)? "]"        TAG in H, Imm, M, F, DImm
//! call   := Fperp "(" int "," expr ")" | B "(" ["-"] int "," expr ")" | chi "(" expr ")"
//! ```
//!
//! Evaluation works in `H` (NSym), `M` (QSym) or `h` (Sym) coordinates and
//! converts to the requested basis at the end.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::compositions::{Composition, PART_CAP};
use crate::error::Error;
use crate::kernel::{Algebra, Basis, BasisElement, LinComb};
use crate::nsym::{bernstein_apply, chi, NSymElem, SymElem, TransitionCache};
use crate::pieri::{skew_fundamental, SkewMethod};
use crate::qsym::{f_to_m, m_to_f, qsym_mult, QSymElem};

/// Why an expression could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalcError {
    /// Malformed input; `column` is 1-based.
    Parse { column: usize, message: String },
    /// Algebra mismatch or a basis that does not fit the result.
    Type(String),
    /// The degree cap was exceeded.
    Resource(String),
}

impl CalcError {
    fn parse(column: usize, message: impl Into<String>) -> Self {
        CalcError::Parse {
            column,
            message: message.into(),
        }
    }

    /// 1 for parse errors, 2 for type errors, 3 for resource errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CalcError::Parse { .. } => 1,
            CalcError::Type(_) => 2,
            CalcError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CalcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalcError::Parse { column, message } => {
                write!(f, "parse error at column {column}: {message}")
            }
            CalcError::Type(m) => write!(f, "type error: {m}"),
            CalcError::Resource(m) => write!(f, "resource error: {m}"),
        }
    }
}

impl std::error::Error for CalcError {}

impl From<Error> for CalcError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeCap { .. } => CalcError::Resource(e.to_string()),
            other => CalcError::Type(other.to_string()),
        }
    }
}

type CalcResult<T> = std::result::Result<T, CalcError>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Atom(Basis, Composition),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Fperp(usize, Box<Expr>),
    B(i64, Box<Expr>),
    Chi(Box<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn lex(input: &str) -> CalcResult<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let value = digits.parse().expect("digits parse as an integer");
            out.push(Token {
                tok: Tok::Int(value),
                column,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Name(chars[start..i].iter().collect()),
                column,
            });
        } else if "+-*()[],".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                column,
            });
            i += 1;
        } else {
            return Err(CalcError::parse(
                column,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn at(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect(&mut self, c: char) -> CalcResult<()> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(CalcError::parse(
                t.column,
                format!("expected `{c}`, found {}", describe(&t.tok)),
            ))
        }
    }

    fn expr(&mut self) -> CalcResult<Expr> {
        let mut left = self.term()?;
        loop {
            if self.at('+') {
                self.next();
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.at('-') {
                self.next();
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> CalcResult<Expr> {
        let mut left = self.factor()?;
        while self.at('*') {
            self.next();
            left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> CalcResult<Expr> {
        let t = self.next();
        match t.tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Sym('-') => Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Name(name) => match name.as_str() {
                "H" | "Imm" | "M" | "F" | "DImm" => {
                    let basis = Basis::from_tag(&name).expect("tag is known");
                    self.atom(basis, t.column)
                }
                "Fperp" | "B" | "chi" => self.call(&name, t.column),
                _ => Err(CalcError::parse(
                    t.column,
                    format!("unknown tag or operator `{name}`"),
                )),
            },
            other => Err(CalcError::parse(
                t.column,
                format!("unexpected {}", describe(&other)),
            )),
        }
    }

    fn atom(&mut self, basis: Basis, column: usize) -> CalcResult<Expr> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.at(']') {
            loop {
                let t = self.next();
                match t.tok {
                    Tok::Int(v) => parts.push(small(&v, t.column)?),
                    other => {
                        return Err(CalcError::parse(
                            t.column,
                            format!("expected a part, found {}", describe(&other)),
                        ))
                    }
                }
                if self.at(',') {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(']')?;
        let alpha = Composition::new(parts).map_err(|e| CalcError::parse(column, e.to_string()))?;
        Ok(Expr::Atom(basis, alpha))
    }

    fn call(&mut self, name: &str, column: usize) -> CalcResult<Expr> {
        self.expect('(')?;
        let mut args = vec![self.expr()?];
        while self.at(',') {
            self.next();
            args.push(self.expr()?);
        }
        self.expect(')')?;
        let arity = if name == "chi" { 1 } else { 2 };
        if args.len() != arity {
            return Err(CalcError::parse(
                column,
                format!("{name} takes {arity} argument(s), got {}", args.len()),
            ));
        }
        let body = Box::new(args.pop().expect("arity checked"));
        match name {
            "chi" => Ok(Expr::Chi(body)),
            "Fperp" => match &args[0] {
                Expr::Int(v) => Ok(Expr::Fperp(small(v, column)?, body)),
                _ => Err(CalcError::parse(
                    column,
                    "Fperp needs a non-negative integer first",
                )),
            },
            _ => {
                let m = match &args[0] {
                    Expr::Int(v) => small(v, column)? as i64,
                    Expr::Neg(inner) => match inner.as_ref() {
                        Expr::Int(v) => -(small(v, column)? as i64),
                        _ => return Err(CalcError::parse(column, "B needs an integer first")),
                    },
                    _ => return Err(CalcError::parse(column, "B needs an integer first")),
                };
                Ok(Expr::B(m, body))
            }
        }
    }
}

fn small(v: &BigInt, column: usize) -> CalcResult<usize> {
    v.to_usize()
        .filter(|&x| x <= PART_CAP)
        .ok_or_else(|| CalcError::parse(column, format!("{v} exceeds the cap {PART_CAP}")))
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::Name(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

pub fn parse(input: &str) -> CalcResult<Expr> {
    let mut p = Parser {
        tokens: lex(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(CalcError::parse(
            t.column,
            format!("unexpected {}", describe(&t.tok)),
        ));
    }
    Ok(e)
}

/// An evaluated expression. Plain integers stay untyped until they meet an
/// element of some algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(BigInt),
    NSym(NSymElem),
    QSym(QSymElem),
    Sym(SymElem),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "an integer",
            Value::NSym(_) => "NSym",
            Value::QSym(_) => "QSym",
            Value::Sym(_) => "Sym",
        }
    }

    fn max_degree(&self) -> usize {
        let sizes = |lc: &LinComb<Composition>| lc.keys().map(|k| k.size()).max().unwrap_or(0);
        match self {
            Value::Scalar(_) => 0,
            Value::NSym(x) => sizes(x.h_coords()),
            Value::QSym(x) => sizes(x.m_coords()),
            Value::Sym(x) => sizes(x.h_coords()),
        }
    }
}

pub struct Evaluator<'a> {
    pub cache: &'a TransitionCache,
    pub method: SkewMethod,
}

impl<'a> Evaluator<'a> {
    pub fn new(cache: &'a TransitionCache, method: SkewMethod) -> Self {
        Self { cache, method }
    }

    /// Every intermediate value must stay within the cache's degree cap.
    pub fn eval(&self, e: &Expr) -> CalcResult<Value> {
        let v = self.eval_inner(e)?;
        let degree = v.max_degree();
        if degree > self.cache.cap() {
            return Err(Error::DegreeCap {
                degree,
                cap: self.cache.cap(),
            }
            .into());
        }
        Ok(v)
    }

    fn eval_inner(&self, e: &Expr) -> CalcResult<Value> {
        Ok(match e {
            Expr::Int(v) => Value::Scalar(v.clone()),
            Expr::Atom(basis, alpha) => {
                self.cache.check_degree(alpha.size())?;
                match basis {
                    Basis::H => Value::NSym(NSymElem::h(alpha.clone())),
                    Basis::Imm => Value::NSym(self.cache.immaculate(alpha)),
                    Basis::M => Value::QSym(QSymElem::m(alpha.clone())),
                    Basis::F => Value::QSym(f_to_m(alpha)),
                    Basis::DImm => Value::QSym(self.cache.dual_immaculate(alpha)?),
                    Basis::SymH => unreachable!("h is not an input tag"),
                }
            }
            Expr::Neg(x) => scale(self.eval(x)?, &BigInt::from(-1)),
            Expr::Add(a, b) => add(self.eval(a)?, self.eval(b)?, false)?,
            Expr::Sub(a, b) => add(self.eval(a)?, self.eval(b)?, true)?,
            Expr::Mul(a, b) => mul(self.eval(a)?, self.eval(b)?)?,
            Expr::Fperp(s, x) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(if *s == 0 { c } else { BigInt::zero() }),
                Value::NSym(x) => Value::NSym(self.fperp(*s, &x)?),
                other => return Err(type_error("Fperp", &other)),
            },
            Expr::B(m, x) => match self.eval(x)? {
                Value::Scalar(c) => Value::NSym(bernstein_apply(*m, &NSymElem::scalar(c))),
                Value::NSym(x) => Value::NSym(bernstein_apply(*m, &x)),
                other => return Err(type_error("B", &other)),
            },
            Expr::Chi(x) => match self.eval(x)? {
                Value::Scalar(c) => Value::Sym(SymElem::scalar(c)),
                Value::NSym(x) => Value::Sym(chi(&x)),
                other => return Err(type_error("chi", &other)),
            },
        })
    }

    /// `F_s^⊥` through the immaculate basis and the selected Pieri route.
    fn fperp(&self, s: usize, x: &NSymElem) -> CalcResult<NSymElem> {
        if s == 0 {
            return Ok(x.clone());
        }
        let coords = self.cache.h_to_immaculate(x)?;
        let mut out = LinComb::zero();
        for (alpha, c) in coords.iter() {
            let skew = skew_fundamental(s, alpha, self.method, self.cache)?;
            out.add_scaled(c, &skew.terms);
        }
        Ok(self.cache.from_immaculate(&out))
    }

    /// The value's coordinates in `basis`; `None` picks the canonical basis
    /// of the value's algebra, with bare integers treated as NSym.
    pub fn express(&self, v: &Value, basis: Option<Basis>) -> CalcResult<BasisElement> {
        let algebra = match v {
            Value::Scalar(_) => basis.map_or(Algebra::NSym, Basis::algebra),
            Value::NSym(_) => Algebra::NSym,
            Value::QSym(_) => Algebra::QSym,
            Value::Sym(_) => Algebra::Sym,
        };
        let basis = basis.unwrap_or(Basis::canonical(algebra));
        if basis.algebra() != algebra {
            return Err(CalcError::Type(format!(
                "basis {basis} does not belong to the algebra of the result"
            )));
        }
        let value = match v {
            Value::Scalar(c) => LinComb::term(Composition::empty(), c.clone()),
            Value::NSym(x) => match basis {
                Basis::Imm => self.cache.h_to_immaculate(x)?,
                _ => x.h_coords().clone(),
            },
            Value::QSym(x) => match basis {
                Basis::F => m_to_f(x),
                Basis::DImm => self.cache.m_to_dual_immaculate(x)?,
                _ => x.m_coords().clone(),
            },
            Value::Sym(x) => x.h_coords().clone(),
        };
        Ok(BasisElement::new(basis, value))
    }

    pub fn evaluate(&self, input: &str, basis: Option<Basis>) -> CalcResult<BasisElement> {
        let v = self.eval(&parse(input)?)?;
        self.express(&v, basis)
    }

    /// `⟨X, Y⟩` for an NSym expression `X` and a QSym expression `Y`.
    pub fn pair(&self, left: &str, right: &str) -> CalcResult<BigInt> {
        let x = match self.eval(&parse(left)?)? {
            Value::Scalar(c) => NSymElem::scalar(c),
            Value::NSym(x) => x,
            other => {
                return Err(CalcError::Type(format!(
                    "left side is {}, expected NSym",
                    other.kind()
                )))
            }
        };
        let y = match self.eval(&parse(right)?)? {
            Value::Scalar(c) => QSymElem::scalar(c),
            Value::QSym(y) => y,
            other => {
                return Err(CalcError::Type(format!(
                    "right side is {}, expected QSym",
                    other.kind()
                )))
            }
        };
        Ok(crate::nsym::pairing(&x, &y))
    }
}

fn type_error(op: &str, v: &Value) -> CalcError {
    CalcError::Type(format!("{op} cannot be applied to {}", v.kind()))
}

fn scale(v: Value, c: &BigInt) -> Value {
    match v {
        Value::Scalar(x) => Value::Scalar(x * c),
        Value::NSym(x) => Value::NSym(x.scale(c)),
        Value::QSym(x) => Value::QSym(x.scale(c)),
        Value::Sym(x) => Value::Sym(x.scale(c)),
    }
}

fn add(a: Value, b: Value, subtract: bool) -> CalcResult<Value> {
    let b = if subtract {
        scale(b, &BigInt::from(-1))
    } else {
        b
    };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Scalar(c), Value::NSym(x)) | (Value::NSym(x), Value::Scalar(c)) => {
            Value::NSym(x + NSymElem::scalar(c))
        }
        (Value::Scalar(c), Value::QSym(x)) | (Value::QSym(x), Value::Scalar(c)) => {
            Value::QSym(x + QSymElem::scalar(c))
        }
        (Value::Scalar(c), Value::Sym(x)) | (Value::Sym(x), Value::Scalar(c)) => {
            Value::Sym(x + SymElem::scalar(c))
        }
        (Value::NSym(x), Value::NSym(y)) => Value::NSym(x + y),
        (Value::QSym(x), Value::QSym(y)) => Value::QSym(x + y),
        (Value::Sym(x), Value::Sym(y)) => Value::Sym(x + y),
        (a, b) => {
            return Err(CalcError::Type(format!(
                "cannot add {} and {}",
                a.kind(),
                b.kind()
            )))
        }
    })
}

fn mul(a: Value, b: Value) -> CalcResult<Value> {
    Ok(match (a, b) {
        (Value::Scalar(c), v) | (v, Value::Scalar(c)) => scale(v, &c),
        (Value::NSym(x), Value::NSym(y)) => Value::NSym(x.mul(&y)),
        (Value::QSym(x), Value::QSym(y)) => Value::QSym(qsym_mult(&x, &y)),
        (Value::Sym(x), Value::Sym(y)) => Value::Sym(x.mul(&y)),
        (a, b) => {
            return Err(CalcError::Type(format!(
                "cannot multiply {} by {}; use `pair` for the pairing",
                a.kind(),
                b.kind()
            )))
        }
    })
}

/// Terms as `±Tag[..]`, `c*Tag[..]` for other coefficients and a bare
/// integer for the constant term. Terms are listed by degree and then with
/// lexicographically increasing parts, which is not the storage order.
pub fn format_text(x: &BasisElement) -> String {
    let mut terms: Vec<_> = x.value.iter().collect();
    terms.sort_by(|(a, _), (b, _)| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
    let mut out = String::new();
    for (i, (alpha, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let body = format!("{}[{}]", x.basis.tag(), join(alpha.parts()));
        if alpha.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{abs}*{body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;

    fn ev() -> Evaluator<'static> {
        Evaluator::new(TransitionCache::global(), SkewMethod::Theorem)
    }

    fn text(input: &str, basis: Option<Basis>) -> String {
        format_text(&ev().evaluate(input, basis).unwrap())
    }

    fn column(input: &str) -> usize {
        match parse(input) {
            Err(CalcError::Parse { column, .. }) => column,
            other => panic!("expected a parse error for {input:?}, got {other:?}"),
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("Fperp(2, Imm[3,1,2])").unwrap(),
            Expr::Fperp(2, Box::new(Expr::Atom(Basis::Imm, composition![3, 1, 2])))
        );
        assert_eq!(
            parse("H[2]*Imm[1,4]").unwrap(),
            Expr::Mul(
                Box::new(Expr::Atom(Basis::H, composition![2])),
                Box::new(Expr::Atom(Basis::Imm, composition![1, 4]))
            )
        );
        assert_eq!(
            parse(" B( -2 ,H[ ] ) ").unwrap(),
            Expr::B(-2, Box::new(Expr::Atom(Basis::H, Composition::empty())))
        );
        assert_eq!(parse("1 - -H[1]").unwrap(), parse("1-(-H[1])").unwrap());
    }

    #[test]
    fn parse_error_columns() {
        assert_eq!(column("F[2"), 4);
        assert_eq!(column("H[2]+"), 6);
        assert_eq!(column("G[1]"), 1);
        assert_eq!(column("H[1] $"), 6);
        assert_eq!(column("Imm[1,0]"), 1);
        assert_eq!(column("Fperp(2)"), 1);
        assert_eq!(column("chi(H[1], H[2])"), 1);
        assert_eq!(column("Fperp(-1, H[1])"), 1);
        assert_eq!(column("H[1]]"), 5);
        assert_eq!(column("(H[1]"), 6);
        assert_eq!(column("H[1,]"), 5);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(text("Fperp(2, Imm[3,1,2])", Some(Basis::Imm)), "Imm[1,1,2]");
        assert_eq!(
            text("H[2]*Imm[1,4]", Some(Basis::Imm)),
            "Imm[2,1,4] - Imm[3,2,2] - Imm[3,3,1] - Imm[4,2,1] - Imm[4,3] - Imm[5,2]"
        );
        assert_eq!(
            text("F[2]*DImm[2,1,2]", Some(Basis::DImm)),
            "-DImm[1,3,1,2] - DImm[1,4,2] + DImm[2,2,1,2] + DImm[3,1,1,2] + DImm[3,2,2] + DImm[4,1,2]"
        );
        assert_eq!(text("H[1]-H[1]", None), "0");
        assert_eq!(text("3 - 2*H[1]", None), "3 - 2*H[1]");
        assert_eq!(text("Imm[1,1]", None), "H[1,1] - H[2]");
        assert_eq!(text("F[1,1]", None), "M[1,1]");
        assert_eq!(text("chi(Imm[1,2])", None), "0");
        assert_eq!(text("chi(Imm[2,1])", None), "h[2,1] - h[3]");
        assert_eq!(
            text("H[2,1] + H[1,2] + H[3]", None),
            "H[1,2] + H[2,1] + H[3]"
        );
        assert_eq!(text("B(1, 1)", Some(Basis::Imm)), "Imm[1]");
        assert_eq!(text("5", Some(Basis::M)), "5");
    }

    #[test]
    fn every_method_gives_the_same_fperp() {
        for method in SkewMethod::ALL {
            let e = Evaluator::new(TransitionCache::global(), method);
            let got = e
                .evaluate("Fperp(2, Imm[3,2,2] + 2*H[1,4])", Some(Basis::Imm))
                .unwrap();
            let want = ev()
                .evaluate("Fperp(2, Imm[3,2,2] + 2*H[1,4])", Some(Basis::Imm))
                .unwrap();
            assert_eq!(got, want, "{method}");
        }
        assert_eq!(text("Fperp(2, H[1,4])", None), "H[1,2] + H[3]");
        assert_eq!(text("Fperp(0, H[1,4])", None), "H[1,4]");
    }

    #[test]
    fn type_and_resource_errors() {
        let err = |s: &str, b: Option<Basis>| ev().evaluate(s, b).unwrap_err().exit_code();
        assert_eq!(err("H[1]*M[1]", None), 2);
        assert_eq!(err("H[1]+F[1]", None), 2);
        assert_eq!(err("chi(M[1])", None), 2);
        assert_eq!(err("Fperp(1, M[2])", None), 2);
        assert_eq!(err("H[1]", Some(Basis::M)), 2);
        assert_eq!(err("Imm[9]", None), 3);
        assert_eq!(err("H[5]*H[4]", None), 3);
        assert_eq!(err("F[2", None), 1);
        let small = TransitionCache::new(3);
        let e = Evaluator::new(&small, SkewMethod::Duality);
        assert_eq!(e.evaluate("H[2,2]", None).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn pairing_subcommand() {
        assert_eq!(ev().pair("Imm[2,1]", "DImm[2,1]").unwrap(), BigInt::one());
        assert_eq!(ev().pair("Imm[2,1]", "DImm[1,2]").unwrap(), BigInt::zero());
        assert_eq!(
            ev().pair("H[2,1]", "M[2,1] + 3*M[3]").unwrap(),
            BigInt::one()
        );
        assert_eq!(ev().pair("M[1]", "M[1]").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn json_output() {
        let x = ev()
            .evaluate("Fperp(2, Imm[3,1,2])", Some(Basis::Imm))
            .unwrap();
        assert_eq!(
            x.to_json(),
            r#"{"basis":"Imm","terms":[{"index":[1,1,2],"coeff":"1"}]}"#
        );
    }
}
