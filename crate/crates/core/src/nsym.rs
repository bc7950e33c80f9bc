//! Non-commutative symmetric functions, stored in the complete homogeneous
//! basis `H`.
//!
//! Operators act on `H_α` by simple rules: left multiplication by `H_m`
//! prepends a part, `F_r^⊥` removes `r` cells spread over the parts, and
//! `F_{1^r}^⊥` removes one cell from each of `r` distinct parts. The
//! non-commutative Bernstein operator `𝔹_m = Σ_i (-1)^i H_{m+i} F_{1^i}^⊥` and
//! the immaculate functions `𝔖_α = 𝔹_{α_1}⋯𝔹_{α_m}(1)` are built from these.
//! `H_0 = 1` and `H_{-r} = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::kernel::LinComb;
use crate::qsym::{qsym_mult, QSymElem};

/// Default largest degree for which transition matrices are built.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// An element of NSym in `H` coordinates.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NSymElem(LinComb<Composition>);

impl NSymElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::h(Composition::empty())
    }

    pub fn h(alpha: Composition) -> Self {
        Self(LinComb::monomial(alpha))
    }

    pub fn scalar(c: BigInt) -> Self {
        Self(LinComb::term(Composition::empty(), c))
    }

    pub fn from_h_coords(coords: LinComb<Composition>) -> Self {
        Self(coords)
    }

    pub fn h_coords(&self) -> &LinComb<Composition> {
        &self.0
    }

    pub fn into_h_coords(self) -> LinComb<Composition> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        h_mult(self, other)
    }

    /// Longest composition in the support.
    pub fn max_length(&self) -> usize {
        self.0.keys().map(Composition::len).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(Composition::size).max().unwrap_or(0)
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, NSymElem> {
        let mut out: BTreeMap<usize, NSymElem> = BTreeMap::new();
        for (k, c) in self.0.iter() {
            out.entry(k.size())
                .or_default()
                .0
                .add_term(k.clone(), c.clone());
        }
        out
    }

    /// Linear extension of a map on `H_α`.
    pub fn map_h(&self, mut f: impl FnMut(&Composition) -> NSymElem) -> NSymElem {
        Self(self.0.apply_linear(|k| f(k).0))
    }
}

impl Add for NSymElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for NSymElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for NSymElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl fmt::Debug for NSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{:?}", self.0)
    }
}

/// Concatenation of indices, extended bilinearly.
pub fn h_mult(a: &NSymElem, b: &NSymElem) -> NSymElem {
    let mut out = LinComb::zero();
    for (ka, ca) in a.0.iter() {
        for (kb, cb) in b.0.iter() {
            out.add_term(ka.concat(kb), ca * cb);
        }
    }
    NSymElem(out)
}

/// Left multiplication by `H_m` with `H_0 = 1` and `H_{-r} = 0`.
fn left_h(m: i64, x: &NSymElem) -> NSymElem {
    match m {
        m if m < 0 => NSymElem::zero(),
        0 => x.clone(),
        m => {
            NSymElem(x.0.apply_linear(|k| {
                LinComb::monomial(k.prepend(m as usize).expect("part within cap"))
            }))
        }
    }
}

/// Sum of `H_{comp(α - j)}` over `j` with `|j| = r` and `0 <= j_i <= limit(α_i)`.
fn remove_cells(r: usize, alpha: &Composition, limit: impl Fn(usize) -> usize) -> NSymElem {
    let parts = alpha.parts();
    let caps: Vec<usize> = parts.iter().map(|&p| limit(p).min(p)).collect();
    let mut room = vec![0usize; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        room[i] = room[i + 1] + caps[i];
    }
    if room[0] < r {
        return NSymElem::zero();
    }

    let mut out = LinComb::zero();
    let mut acc = Vec::with_capacity(parts.len());
    fn go(
        i: usize,
        left: usize,
        parts: &[usize],
        caps: &[usize],
        room: &[usize],
        acc: &mut Vec<usize>,
        out: &mut LinComb<Composition>,
    ) {
        if i == parts.len() {
            let key = Composition::new(acc.clone()).expect("positive parts");
            out.add_term(key, BigInt::one());
            return;
        }
        let lo = left.saturating_sub(room[i + 1]);
        for j in lo..=caps[i].min(left) {
            let keep = parts[i] - j;
            if keep > 0 {
                acc.push(keep);
            }
            go(i + 1, left - j, parts, caps, room, acc, out);
            if keep > 0 {
                acc.pop();
            }
        }
    }
    go(0, r, parts, &caps, &room, &mut acc, &mut out);
    NSymElem(out)
}

/// `F_r^⊥ H_α`.
pub fn fperp_row_on_h(r: usize, alpha: &Composition) -> NSymElem {
    remove_cells(r, alpha, |p| p)
}

/// `F_{1^r}^⊥ H_α`.
pub fn fperp_col_on_h(r: usize, alpha: &Composition) -> NSymElem {
    remove_cells(r, alpha, |_| 1)
}

/// `F_r^⊥` extended linearly.
pub fn fperp_row(r: usize, x: &NSymElem) -> NSymElem {
    x.map_h(|k| fperp_row_on_h(r, k))
}

/// `F_{1^r}^⊥` extended linearly.
pub fn fperp_col(r: usize, x: &NSymElem) -> NSymElem {
    x.map_h(|k| fperp_col_on_h(r, k))
}

/// `⟨X, Y⟩` with `⟨H_α, M_β⟩ = δ_{α,β}`.
pub fn pairing(x: &NSymElem, y: &QSymElem) -> BigInt {
    let (small, large) = if x.0.len() <= y.m_coords().len() {
        (&x.0, y.m_coords())
    } else {
        (y.m_coords(), &x.0)
    };
    small
        .iter()
        .map(|(k, c)| c * large.coeff(k))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// `G^⊥ X = Σ_β ⟨X, G·M_β⟩ H_β` for any `G ∈ QSym`.
pub fn perp_generic(g: &QSymElem, x: &NSymElem) -> NSymElem {
    let mut out = LinComb::zero();
    for (n, xn) in x.homogeneous_parts() {
        for (d, gd) in g.homogeneous_parts() {
            if d > n {
                continue;
            }
            for beta in compositions_of(n - d) {
                let prod = qsym_mult(&gd, &QSymElem::m(beta.clone()));
                out.add_term(beta, pairing(&xn, &prod));
            }
        }
    }
    NSymElem(out)
}

/// `𝔹_m X = Σ_{i>=0} (-1)^i H_{m+i} F_{1^i}^⊥ X`; the sum stops at the
/// longest composition in the support of `X`.
pub fn bernstein_apply(m: i64, x: &NSymElem) -> NSymElem {
    let mut out = NSymElem::zero();
    for i in 0..=x.max_length() {
        let sub = m + i as i64;
        if sub < 0 {
            continue;
        }
        let term = left_h(sub, &fperp_col(i, x));
        out = if i % 2 == 0 { out + term } else { out - term };
    }
    out
}

/// `𝔖_α` in `H` coordinates, straight from the Bernstein operators.
pub fn immaculate_to_h(alpha: &Composition) -> NSymElem {
    alpha
        .parts()
        .iter()
        .rev()
        .fold(NSymElem::one(), |acc, &p| bernstein_apply(p as i64, &acc))
}

/// An element of Sym in the `h_λ` basis, keyed by partitions.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymElem(LinComb<Composition>);

impl SymElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: BigInt) -> Self {
        Self(LinComb::term(Composition::empty(), c))
    }

    pub fn h(lambda: &Composition) -> Self {
        Self(LinComb::monomial(lambda.sort_to_partition()))
    }

    pub fn h_coords(&self) -> &LinComb<Composition> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LinComb::zero();
        for (a, ca) in self.0.iter() {
            for (b, cb) in other.0.iter() {
                out.add_term(a.concat(b).sort_to_partition(), ca * cb);
            }
        }
        Self(out)
    }
}

impl Add for SymElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for SymElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for SymElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// The forgetful map `H_α ↦ h_{sort(α)}`.
pub fn chi(x: &NSymElem) -> SymElem {
    SymElem(x.0.apply_linear(|k| LinComb::monomial(k.sort_to_partition())))
}

/// Exact change of basis between `𝔖` and `H` in one degree.
pub struct Transition {
    degree: usize,
    index: Vec<Composition>,
    position: HashMap<Composition, usize>,
    imm_rows: Vec<NSymElem>,
    h_rows: Vec<LinComb<Composition>>,
}

impl Transition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Compositions of the degree in canonical order; row/column labels.
    pub fn index(&self) -> &[Composition] {
        &self.index
    }

    pub fn position(&self, alpha: &Composition) -> Option<usize> {
        self.position.get(alpha).copied()
    }

    /// `𝔖_α` in `H` coordinates.
    pub fn immaculate(&self, alpha: &Composition) -> &NSymElem {
        &self.imm_rows[self.position[alpha]]
    }

    /// `H_β` in `𝔖` coordinates.
    pub fn h_in_immaculate(&self, beta: &Composition) -> &LinComb<Composition> {
        &self.h_rows[self.position[beta]]
    }

    /// Dense matrix whose row `α` holds the `H` coordinates of `𝔖_α`.
    pub fn imm_to_h_matrix(&self) -> Vec<Vec<BigInt>> {
        self.imm_rows
            .iter()
            .map(|row| self.index.iter().map(|b| row.0.coeff(b)).collect())
            .collect()
    }

    /// Dense matrix whose row `β` holds the `𝔖` coordinates of `H_β`.
    pub fn h_to_imm_matrix(&self) -> Vec<Vec<BigInt>> {
        self.h_rows
            .iter()
            .map(|row| self.index.iter().map(|a| row.coeff(a)).collect())
            .collect()
    }
}

/// Rational Gauss-Jordan inversion; `None` when singular.
fn invert(matrix: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        if !inv.is_one() {
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

type Slot = Arc<OnceLock<Result<Arc<Transition>>>>;

/// Memoized `𝔖 ↔ H` transitions per degree, up to a degree cap.
///
/// Readers share built transitions; each degree is built at most once.
pub struct TransitionCache {
    cap: usize,
    slots: Mutex<HashMap<usize, Slot>>,
}

static GLOBAL: LazyLock<TransitionCache> =
    LazyLock::new(|| TransitionCache::new(DEFAULT_DEGREE_CAP));

impl TransitionCache {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            slots: Mutex::new(HashMap::new()),
        }
    }

    /// Process-wide cache with the default cap.
    pub fn global() -> &'static TransitionCache {
        &GLOBAL
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            Err(Error::DegreeCap {
                degree,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn transition(&self, degree: usize) -> Result<Arc<Transition>> {
        self.check_degree(degree)?;
        let slot = self
            .slots
            .lock()
            .expect("transition cache poisoned")
            .entry(degree)
            .or_default()
            .clone();
        slot.get_or_init(|| self.build(degree).map(Arc::new))
            .clone()
    }

    fn build(&self, degree: usize) -> Result<Transition> {
        let index = compositions_of(degree);
        let position: HashMap<_, _> = index
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();

        let mut imm_rows = Vec::with_capacity(index.len());
        for alpha in &index {
            let row = match alpha.first() {
                None => NSymElem::one(),
                Some(first) => {
                    let tail = alpha.tail()?;
                    let below = self.transition(tail.size())?;
                    bernstein_apply(first as i64, below.immaculate(&tail))
                }
            };
            imm_rows.push(row);
        }

        let dense: Vec<Vec<BigInt>> = imm_rows
            .iter()
            .map(|row| index.iter().map(|b| row.0.coeff(b)).collect())
            .collect();
        let inverse = invert(&dense).ok_or(Error::NonIntegral(degree))?;

        let mut h_rows = Vec::with_capacity(index.len());
        for row in inverse {
            let mut coords = LinComb::zero();
            for (alpha, x) in index.iter().zip(row) {
                if !x.is_integer() {
                    return Err(Error::NonIntegral(degree));
                }
                coords.add_term(alpha.clone(), x.to_integer());
            }
            h_rows.push(coords);
        }

        Ok(Transition {
            degree,
            index,
            position,
            imm_rows,
            h_rows,
        })
    }

    /// `𝔖_α` in `H` coordinates; memoized below the cap.
    pub fn immaculate(&self, alpha: &Composition) -> NSymElem {
        match self.transition(alpha.size()) {
            Ok(t) => t.immaculate(alpha).clone(),
            Err(_) => immaculate_to_h(alpha),
        }
    }

    /// `Σ c_α 𝔖_α` in `H` coordinates.
    pub fn from_immaculate(&self, coords: &LinComb<Composition>) -> NSymElem {
        NSymElem(coords.apply_linear(|a| self.immaculate(a).0))
    }

    /// Coordinates of `X` in the immaculate basis.
    pub fn h_to_immaculate(&self, x: &NSymElem) -> Result<LinComb<Composition>> {
        x.0.try_apply_linear(|beta| {
            let t = self.transition(beta.size())?;
            Ok(t.h_in_immaculate(beta).clone())
        })
    }

    /// `𝔖*_α` in `M` coordinates: the coefficient of `M_β` is the coefficient
    /// of `𝔖_α` in `H_β`.
    pub fn dual_immaculate(&self, alpha: &Composition) -> Result<QSymElem> {
        let t = self.transition(alpha.size())?;
        let coords = t
            .index()
            .iter()
            .zip(&t.h_rows)
            .map(|(beta, row)| (beta.clone(), row.coeff(alpha)))
            .collect();
        Ok(QSymElem::from_m_coords(coords))
    }

    /// Coordinates of `Y` in the dual immaculate basis: `d_α = ⟨𝔖_α, Y⟩`.
    pub fn m_to_dual_immaculate(&self, y: &QSymElem) -> Result<LinComb<Composition>> {
        let mut out = LinComb::zero();
        for (n, yn) in y.homogeneous_parts() {
            let t = self.transition(n)?;
            for (alpha, row) in t.index().iter().zip(&t.imm_rows) {
                out.add_term(alpha.clone(), pairing(row, &yn));
            }
        }
        Ok(out)
    }

    /// `Σ d_α 𝔖*_α` in `M` coordinates.
    pub fn from_dual_immaculate(&self, coords: &LinComb<Composition>) -> Result<QSymElem> {
        let m = coords
            .try_apply_linear(|a| Ok::<_, Error>(self.dual_immaculate(a)?.m_coords().clone()))?;
        Ok(QSymElem::from_m_coords(m))
    }
}

/// Whether `a` has ones on the diagonal and `a · b` is the identity.
pub fn is_unimodular_pair(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    let n = a.len();
    a.iter().enumerate().all(|(i, row)| {
        row[i].is_one()
            && (0..n).all(|j| {
                let s: BigInt = row
                    .iter()
                    .zip(b)
                    .filter(|(x, y)| !x.is_zero() && !y[j].is_zero())
                    .map(|(x, y)| x * &y[j])
                    .sum();
                s == BigInt::from((i == j) as i32)
            })
    })
}

/// Largest absolute entry, for reporting.
pub fn max_abs_entry(a: &[Vec<BigInt>]) -> BigInt {
    a.iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_default()
}
