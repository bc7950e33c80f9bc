//! Sparse formal linear combinations with exact integer coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::error::{Error, Result};

/// A finite sum `Σ c_k · k` over keys `K`. Zero coefficients are never stored,
/// and iteration follows `K`'s ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K> {
    terms: BTreeMap<K, BigInt>,
}

impl<K> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigInt> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &BigInt, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// Linear extension of `f`: `Σ_k a[k] · f(k)`.
    pub fn apply_linear<K2, F>(&self, mut f: F) -> LinComb<K2>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    pub fn try_apply_linear<K2, F, E>(&self, mut f: F) -> std::result::Result<LinComb<K2>, E>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> std::result::Result<LinComb<K2>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K> IntoIterator for LinComb<K> {
    type Item = (K, BigInt);
    type IntoIter = btree_map::IntoIter<K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<K: fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Algebra {
    NSym,
    QSym,
    Sym,
}

/// Display bases. `Imm` is the immaculate basis, `DImm` its dual, `SymH` the
/// complete homogeneous basis of Sym (tag `h`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    H,
    Imm,
    M,
    F,
    DImm,
    SymH,
}

impl Basis {
    pub const ALL: [Basis; 6] = [
        Basis::H,
        Basis::Imm,
        Basis::M,
        Basis::F,
        Basis::DImm,
        Basis::SymH,
    ];

    pub fn algebra(self) -> Algebra {
        match self {
            Basis::H | Basis::Imm => Algebra::NSym,
            Basis::M | Basis::F | Basis::DImm => Algebra::QSym,
            Basis::SymH => Algebra::Sym,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Basis::H => "H",
            Basis::Imm => "Imm",
            Basis::M => "M",
            Basis::F => "F",
            Basis::DImm => "DImm",
            Basis::SymH => "h",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == tag)
            .ok_or_else(|| Error::UnknownBasis(tag.to_string()))
    }

    /// The basis each algebra stores internally.
    pub fn canonical(algebra: Algebra) -> Self {
        match algebra {
            Algebra::NSym => Basis::H,
            Algebra::QSym => Basis::M,
            Algebra::Sym => Basis::SymH,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    Zero,
    Homogeneous(usize),
    Mixed,
}

/// Coordinates of an element in one named basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisElement {
    pub basis: Basis,
    pub value: LinComb<Composition>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    basis: String,
    terms: Vec<TermJson>,
}

impl BasisElement {
    pub fn new(basis: Basis, value: LinComb<Composition>) -> Self {
        Self { basis, value }
    }

    pub fn algebra(&self) -> Algebra {
        self.basis.algebra()
    }

    pub fn degree(&self) -> Degree {
        let mut sizes = self.value.keys().map(Composition::size);
        match sizes.next() {
            None => Degree::Zero,
            Some(n) if sizes.all(|m| m == n) => Degree::Homogeneous(n),
            Some(_) => Degree::Mixed,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = ElementJson {
            basis: self.basis.tag().to_string(),
            terms: self
                .value
                .iter()
                .map(|(k, c)| TermJson {
                    index: k.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ElementJson =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let basis = Basis::from_tag(&doc.basis)?;
        let mut value = LinComb::zero();
        for t in doc.terms {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Json(format!("bad coefficient `{}`", t.coeff)))?;
            value.add_term(Composition::new(t.index)?, coeff);
        }
        Ok(Self { basis, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;
    use proptest::prelude::*;

    fn lc(terms: &[(Composition, i64)]) -> LinComb<Composition> {
        terms
            .iter()
            .map(|(k, c)| (k.clone(), BigInt::from(*c)))
            .collect()
    }

    #[test]
    fn add_and_scale_examples() {
        let a = lc(&[(composition![2, 1], 1)]);
        let b = lc(&[(composition![2, 1], -1)]);
        assert!((a.clone() + b).is_zero());
        assert!(a.scale(&BigInt::zero()).is_zero());
        let sum = lc(&[(composition![3], 1)]) + lc(&[(composition![1, 2], 2)]);
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coeff(&composition![1, 2]), BigInt::from(2));
        assert_eq!(sum.coeff(&composition![3]), BigInt::from(1));
    }

    #[test]
    fn apply_linear_examples() {
        let a = lc(&[(composition![2, 1], 3), (composition![3], -2)]);
        assert_eq!(a.apply_linear(|k| LinComb::monomial(k.clone())), a);
        assert!(a.apply_linear(|_| LinComb::<Composition>::zero()).is_zero());
        let x = lc(&[(composition![2, 1], 3)]);
        assert_eq!(
            x.apply_linear(|k| LinComb::monomial(k.tail().unwrap())),
            lc(&[(composition![1], 3)])
        );
    }

    #[test]
    fn iteration_is_canonical_and_pruned() {
        let mut a = lc(&[
            (composition![1, 1, 1], 1),
            (composition![3], 1),
            (composition![1, 2], 1),
            (composition![2, 1], 1),
        ]);
        a.add_term(composition![1, 2], BigInt::from(-1));
        let keys: Vec<_> = a.keys().cloned().collect();
        assert_eq!(
            keys,
            vec![composition![3], composition![2, 1], composition![1, 1, 1]]
        );
    }

    #[test]
    fn json_round_trip_and_shape() {
        let e = BasisElement::new(
            Basis::Imm,
            lc(&[(composition![2, 1, 2], -1), (composition![3, 2], 5)]),
        );
        let text = e.to_json();
        assert_eq!(
            text,
            r#"{"basis":"Imm","terms":[{"index":[3,2],"coeff":"5"},{"index":[2,1,2],"coeff":"-1"}]}"#
        );
        assert_eq!(BasisElement::from_json(&text).unwrap(), e);
        assert!(BasisElement::from_json(r#"{"basis":"Q","terms":[]}"#).is_err());
    }

    #[test]
    fn degree_classification() {
        let zero = BasisElement::new(Basis::H, LinComb::zero());
        assert_eq!(zero.degree(), Degree::Zero);
        let h = BasisElement::new(
            Basis::H,
            lc(&[(composition![2, 1], 1), (composition![3], 2)]),
        );
        assert_eq!(h.degree(), Degree::Homogeneous(3));
        let m = BasisElement::new(Basis::M, lc(&[(composition![2], 1), (composition![3], 2)]));
        assert_eq!(m.degree(), Degree::Mixed);
    }

    fn key() -> impl Strategy<Value = Composition> {
        prop::sample::select(crate::compositions::compositions_of(4))
    }

    fn comb() -> impl Strategy<Value = LinComb<Composition>> {
        prop::collection::vec((key(), -3i64..=3), 0..6)
            .prop_map(|v| v.into_iter().map(|(k, c)| (k, BigInt::from(c))).collect())
    }

    proptest! {
        #[test]
        fn ring_laws(a in comb(), b in comb(), c in comb(), k in -4i64..=4) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            let k = BigInt::from(k);
            prop_assert_eq!((a.clone() + b.clone()).scale(&k), a.scale(&k) + b.scale(&k));
            prop_assert!((a.clone() - a.clone()).is_zero());
            prop_assert!(a.iter().all(|(_, v)| !v.is_zero()));
        }

        #[test]
        fn apply_linear_is_additive(a in comb(), b in comb(), which in 0usize..3) {
            let f = |k: &Composition| -> LinComb<Composition> {
                match which {
                    0 => LinComb::monomial(k.sort_to_partition()),
                    1 => LinComb::term(k.concat(k), 2),
                    _ => LinComb::monomial(k.clone()) - LinComb::monomial(k.sort_to_partition()),
                }
            };
            prop_assert_eq!(
                (a.clone() + b.clone()).apply_linear(f),
                a.apply_linear(f) + b.apply_linear(f)
            );
        }
    }
}
