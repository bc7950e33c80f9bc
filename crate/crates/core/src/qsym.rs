//! Quasi-symmetric functions, stored in the monomial basis `M`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::compositions::{compositions_of, Composition, DescentSet};
use crate::error::Result;
use crate::kernel::LinComb;
use crate::nsym::TransitionCache;

/// An element of QSym in `M` coordinates.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSymElem(LinComb<Composition>);

impl QSymElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::m(Composition::empty())
    }

    pub fn m(alpha: Composition) -> Self {
        Self(LinComb::monomial(alpha))
    }

    pub fn scalar(c: BigInt) -> Self {
        Self(LinComb::term(Composition::empty(), c))
    }

    pub fn from_m_coords(coords: LinComb<Composition>) -> Self {
        Self(coords)
    }

    pub fn m_coords(&self) -> &LinComb<Composition> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        qsym_mult(self, other)
    }

    pub fn homogeneous_parts(&self) -> BTreeMap<usize, QSymElem> {
        let mut out: BTreeMap<usize, QSymElem> = BTreeMap::new();
        for (k, c) in self.0.iter() {
            out.entry(k.size())
                .or_default()
                .0
                .add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Add for QSymElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for QSymElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for QSymElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl fmt::Debug for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{:?}", self.0)
    }
}

/// Compositions finer than or equal to `alpha`.
fn refinements(alpha: &Composition) -> Vec<Composition> {
    let n = alpha.size();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let fixed = alpha.descent_set();
    let free: Vec<usize> = (1..n)
        .filter(|d| fixed.elements().binary_search(d).is_err())
        .collect();
    (0u64..(1u64 << free.len()))
        .map(|mask| {
            let mut d = fixed.elements().to_vec();
            d.extend(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e),
            );
            DescentSet::new(n, d)
                .expect("descents within range")
                .to_composition()
        })
        .collect()
}

/// `F_α = Σ_{β ≤ α} M_β`.
pub fn f_to_m(alpha: &Composition) -> QSymElem {
    QSymElem(
        refinements(alpha)
            .into_iter()
            .map(|b| (b, BigInt::one()))
            .collect(),
    )
}

/// `Σ c_α F_α` in `M` coordinates.
pub fn f_coords_to_m(coords: &LinComb<Composition>) -> QSymElem {
    QSymElem(coords.apply_linear(|a| f_to_m(a).0))
}

/// F coordinates, by Möbius inversion `M_α = Σ_{β ≤ α} (-1)^{ℓ(β)-ℓ(α)} F_β`.
pub fn m_to_f(x: &QSymElem) -> LinComb<Composition> {
    x.0.apply_linear(|alpha| {
        refinements(alpha)
            .into_iter()
            .map(|b| {
                let sign = if (b.len() - alpha.len()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                (b, BigInt::from(sign))
            })
            .collect()
    })
}

type ShuffleKey = (Composition, Composition);

static SHUFFLES: LazyLock<RwLock<HashMap<ShuffleKey, Arc<LinComb<Composition>>>>> =
    LazyLock::new(Default::default);

fn quasi_shuffle(a: &Composition, b: &Composition) -> Arc<LinComb<Composition>> {
    if a.is_empty() || b.is_empty() {
        let only = if a.is_empty() { b } else { a };
        return Arc::new(LinComb::monomial(only.clone()));
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = SHUFFLES.read().expect("shuffle memo poisoned").get(&key) {
        return hit.clone();
    }

    let (x, y) = (a.first().unwrap(), b.first().unwrap());
    let (ta, tb) = (a.tail().unwrap(), b.tail().unwrap());
    let mut out = LinComb::zero();
    let mut lead = |first: usize, rest: &LinComb<Composition>| {
        for (k, c) in rest.iter() {
            out.add_term(k.prepend(first).expect("part within cap"), c.clone());
        }
    };
    lead(x, &quasi_shuffle(&ta, b));
    lead(y, &quasi_shuffle(a, &tb));
    lead(x + y, &quasi_shuffle(&ta, &tb));

    let out = Arc::new(out);
    SHUFFLES
        .write()
        .expect("shuffle memo poisoned")
        .insert(key, out.clone());
    out
}

/// `M_α · M_β`: interleavings of the parts in which pairs of parts, one from
/// each side, may merge by addition.
pub fn m_quasi_shuffle(alpha: &Composition, beta: &Composition) -> QSymElem {
    QSymElem((*quasi_shuffle(alpha, beta)).clone())
}

pub fn qsym_mult(x: &QSymElem, y: &QSymElem) -> QSymElem {
    let mut out = LinComb::zero();
    for (a, ca) in x.0.iter() {
        for (b, cb) in y.0.iter() {
            out.add_scaled(&(ca * cb), &quasi_shuffle(a, b));
        }
    }
    QSymElem(out)
}

/// `m_λ = Σ_{sort(α) = λ} M_α`.
pub fn monomial_symmetric(lambda: &Composition) -> QSymElem {
    let target = lambda.sort_to_partition();
    QSymElem(
        compositions_of(lambda.size())
            .into_iter()
            .filter(|a| a.sort_to_partition() == target)
            .map(|a| (a, BigInt::one()))
            .collect(),
    )
}

/// `𝔖*_α` in `M` coordinates.
pub fn dual_immaculate_to_m(alpha: &Composition, cache: &TransitionCache) -> Result<QSymElem> {
    cache.dual_immaculate(alpha)
}

/// Coordinates in the dual immaculate basis.
pub fn m_to_dual_immaculate(x: &QSymElem, cache: &TransitionCache) -> Result<LinComb<Composition>> {
    cache.m_to_dual_immaculate(x)
}
