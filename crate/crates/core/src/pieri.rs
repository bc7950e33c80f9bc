//! Pieri rules for the immaculate and dual immaculate bases.
//!
//! Commuting `F_s^⊥` past `𝔹_{α_1}, 𝔹_{α_2}, …` records an integer vector
//! `β`, one entry per step, giving
//!
//! ```text
//! F_s^⊥ 𝔖_α = Σ_{β ∈ Z_{s,α}} sgn(β) 𝔖_{comp(α - β)}
//! ```
//!
//! where `Z_{s,α}` is cut out by the conditions checked in [`is_in_z`]. The
//! sum has cancellations; [`coeff`] gives the cancellation-free coefficient of
//! each `𝔖_γ`, which is always `-1`, `0` or `1`. Three routes compute
//! `F_s^⊥ 𝔖_α` (see [`SkewMethod`]) and must agree.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::json;

use crate::compositions::{compositions_of, Composition, IntVector};
use crate::error::{Error, Result};
use crate::kernel::LinComb;
use crate::nsym::{h_mult, pairing, NSymElem, TransitionCache};
use crate::qsym::{f_to_m, qsym_mult, QSymElem};

/// How [`skew_fundamental`] computes `F_s^⊥ 𝔖_α`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum SkewMethod {
    /// Closed-form coefficients.
    #[default]
    Theorem,
    /// Signed enumeration of `Z_{s,α}`, grouped by `comp(α - β)`.
    ZEnum,
    /// `⟨𝔖_α, F_s 𝔖*_γ⟩` computed in QSym.
    Duality,
}

impl SkewMethod {
    pub const ALL: [SkewMethod; 3] = [SkewMethod::Theorem, SkewMethod::ZEnum, SkewMethod::Duality];

    pub fn name(self) -> &'static str {
        match self {
            SkewMethod::Theorem => "theorem",
            SkewMethod::ZEnum => "z_enum",
            SkewMethod::Duality => "duality",
        }
    }
}

impl FromStr for SkewMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

impl fmt::Display for SkewMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `F_s^⊥ 𝔖_α` in the immaculate basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PieriExpansion {
    pub s: usize,
    pub alpha: Composition,
    pub terms: LinComb<Composition>,
}

impl PieriExpansion {
    pub fn to_json_value(&self, method: SkewMethod) -> serde_json::Value {
        json!({
            "op": "skew_fundamental",
            "s": self.s,
            "alpha": self.alpha,
            "method": method.name(),
            "terms": terms_json(&self.terms, |k| json!(k)),
        })
    }
}

/// The unstraightened sum `F_r^⊥ 𝔖_α = Σ 𝔖_β` over integer vectors `β`.
/// Keys are formal immaculate indices and need not be compositions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawExpansion {
    pub r: usize,
    pub alpha: Composition,
    pub terms: LinComb<IntVector>,
}

impl RawExpansion {
    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "op": "skew_pieri_raw",
            "r": self.r,
            "alpha": self.alpha,
            "formal": true,
            "terms": terms_json(&self.terms, |k| json!(k)),
        })
    }
}

fn terms_json<K: Ord + Clone>(
    terms: &LinComb<K>,
    index: impl Fn(&K) -> serde_json::Value,
) -> serde_json::Value {
    terms
        .iter()
        .map(|(k, c)| {
            let coeff = match i64::try_from(c) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            };
            json!({ "index": index(k), "coeff": coeff })
        })
        .collect()
}

fn positive(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::ZeroSkew)
    } else {
        Ok(())
    }
}

fn signed_parts(alpha: &Composition) -> Vec<i64> {
    alpha.parts().iter().map(|&p| p as i64).collect()
}

/// Membership in `Z_{s,α}`, evaluated condition by condition.
pub fn is_in_z(s: usize, alpha: &Composition, beta: &IntVector) -> Result<bool> {
    positive(s)?;
    if beta.len() != alpha.len() {
        return Err(Error::LengthMismatch {
            expected: alpha.len(),
            got: beta.len(),
        });
    }
    let s = s as i64;
    let a = signed_parts(alpha);
    let b = beta.entries();
    let m = a.len();

    // partial sums stay at most s and end at s
    let mut prefix = 0i64;
    for (i, &x) in b.iter().enumerate() {
        prefix += x;
        if i + 1 < m && prefix > s {
            return Ok(false);
        }
    }
    if prefix != s {
        return Ok(false);
    }

    // β <= α entrywise, with equality in at most one place
    if a.iter().zip(b).any(|(x, y)| x - y < 0) {
        return Ok(false);
    }
    if a.iter().zip(b).filter(|(x, y)| x == y).count() > 1 {
        return Ok(false);
    }

    // compare α_i with what is left of s before step i
    let mut prefix = 0i64;
    for i in 0..m {
        let left = s - prefix;
        let ok = match a[i].cmp(&left) {
            std::cmp::Ordering::Greater => 0 <= b[i] && b[i] <= left,
            std::cmp::Ordering::Equal => {
                (b[i] == a[i] && b[i + 1..].iter().all(|&x| x == 0)) || b[i] < 0
            }
            std::cmp::Ordering::Less => b[i] < 0,
        };
        if !ok {
            return Ok(false);
        }
        prefix += b[i];
    }
    Ok(true)
}

/// All of `Z_{s,α}`, in increasing lexicographic order.
///
/// Depth-first over `β_1, β_2, …`. Besides the case split at each step, the
/// search uses `β_i <= α_i` for every later entry: the remaining budget
/// `s - (β_1 + ⋯ + β_i)` must be reachable by the entries still to come, which
/// bounds `β_i` from below. Taking `β_i = α_i` forces the rest to zero and ends
/// the branch.
pub fn enumerate_z(s: usize, alpha: &Composition) -> Vec<IntVector> {
    if s == 0 {
        return Vec::new();
    }
    let a = signed_parts(alpha);
    let m = a.len();
    let mut suffix = vec![0i64; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] + a[i];
    }

    struct Search<'a> {
        a: &'a [i64],
        suffix: &'a [i64],
        acc: Vec<i64>,
        out: Vec<IntVector>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, left: i64) {
            let m = self.a.len();
            if i == m {
                if left == 0 {
                    self.out.push(IntVector::new(self.acc.clone()));
                }
                return;
            }
            let part = self.a[i];
            let lo = left - self.suffix[i + 1];
            let (from, to) = if part > left {
                (lo.max(0), left)
            } else {
                (lo, -1)
            };
            for b in from..=to {
                self.acc.push(b);
                self.go(i + 1, left - b);
                self.acc.pop();
            }
            if part == left {
                let mut done = self.acc.clone();
                done.push(part);
                done.resize(m, 0);
                self.out.push(IntVector::new(done));
            }
        }
    }

    let mut search = Search {
        a: &a,
        suffix: &suffix,
        acc: Vec::with_capacity(m),
        out: Vec::new(),
    };
    search.go(0, s as i64);
    let mut out = search.out;
    out.sort();
    out
}

/// Indices `k <= r` (1-based) attached to a pair `α, γ` with
/// `ℓ(γ) = ℓ(α) - 1`: `k` is least with `α_i = γ_{i-1}` for all `k < i <= m`,
/// and `α_k < α_{k+1} < ⋯ < α_r` is the longest strict rise from `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainAnchor {
    pub k: usize,
    pub r: usize,
}

impl ChainAnchor {
    pub fn new(alpha: &Composition, gamma: &Composition) -> Option<Self> {
        let (a, g) = (alpha.parts(), gamma.parts());
        let m = a.len();
        if m == 0 || g.len() + 1 != m {
            return None;
        }
        // 1-based: α_i is a[i-1], γ_{i-1} is g[i-2]
        let mut k = m;
        while k > 1 && a[k - 1] == g[k - 2] {
            k -= 1;
        }
        let mut r = k;
        while r < m && a[r - 1] < a[r] {
            r += 1;
        }
        Some(Self { k, r })
    }

    /// The vectors of `Z^γ_{s,α}` in chain order, when the first is valid:
    /// the `j`-th has `α_i - γ_i` before `k`, `α_i - α_{i+1}` on `k..j`,
    /// `α_j` at `j` and zeros after.
    pub fn chain(&self, alpha: &Composition, gamma: &Composition) -> Vec<IntVector> {
        let (a, g) = (signed_parts(alpha), gamma.parts());
        let m = a.len();
        (self.k..=self.r)
            .map(|j| {
                let mut v = Vec::with_capacity(m);
                v.extend((0..self.k - 1).map(|i| a[i] - g[i] as i64));
                v.extend((self.k - 1..j - 1).map(|i| a[i] - a[i + 1]));
                v.push(a[j - 1]);
                v.resize(m, 0);
                IntVector::new(v)
            })
            .collect()
    }
}

fn check_sizes(s: usize, alpha: &Composition, gamma: &Composition) -> Result<()> {
    if gamma.size() + s != alpha.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size(),
            right: gamma.size() + s,
        });
    }
    Ok(())
}

/// `Z^γ_{s,α}`, the part of `Z_{s,α}` with `comp(α - β) = γ`, in closed form.
pub fn enumerate_z_gamma(
    s: usize,
    alpha: &Composition,
    gamma: &Composition,
) -> Result<Vec<IntVector>> {
    positive(s)?;
    check_sizes(s, alpha, gamma)?;
    let m = alpha.len();
    if gamma.len() == m {
        let beta = alpha.minus(gamma)?;
        return Ok(if is_in_z(s, alpha, &beta)? {
            vec![beta]
        } else {
            vec![]
        });
    }
    match ChainAnchor::new(alpha, gamma) {
        Some(anchor) => {
            let chain = anchor.chain(alpha, gamma);
            Ok(if is_in_z(s, alpha, &chain[0])? {
                chain
            } else {
                vec![]
            })
        }
        None => Ok(vec![]),
    }
}

/// The coefficient of `𝔖_γ` in `F_s^⊥ 𝔖_α`.
pub fn coeff(s: usize, alpha: &Composition, gamma: &Composition) -> Result<i32> {
    positive(s)?;
    check_sizes(s, alpha, gamma)?;
    let m = alpha.len();
    if gamma.len() == m {
        let beta = alpha.minus(gamma)?;
        return Ok(if is_in_z(s, alpha, &beta)? {
            beta.sgn()
        } else {
            0
        });
    }
    let Some(anchor) = ChainAnchor::new(alpha, gamma) else {
        return Ok(0);
    };
    if (anchor.r - anchor.k) % 2 == 1 {
        return Ok(0);
    }
    let (a, g) = (alpha.parts(), gamma.parts());
    let mut v: Vec<i64> = (0..anchor.k - 1)
        .map(|i| a[i] as i64 - g[i] as i64)
        .collect();
    let prefix = IntVector::new(v.clone());
    v.push(a[anchor.k - 1] as i64);
    v.resize(m, 0);
    Ok(if is_in_z(s, alpha, &IntVector::new(v))? {
        prefix.sgn()
    } else {
        0
    })
}

type ProductMemo = HashMap<(usize, Composition), Arc<QSymElem>>;

static DUALITY_PRODUCTS: LazyLock<RwLock<ProductMemo>> = LazyLock::new(Default::default);

/// `F_s · 𝔖*_γ` in `M` coordinates, memoized.
fn fs_times_dual(s: usize, gamma: &Composition, cache: &TransitionCache) -> Result<Arc<QSymElem>> {
    let key = (s, gamma.clone());
    if let Some(hit) = DUALITY_PRODUCTS.read().expect("memo poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let row = f_to_m(&Composition::row(s)?);
    let prod = Arc::new(qsym_mult(&row, &cache.dual_immaculate(gamma)?));
    DUALITY_PRODUCTS
        .write()
        .expect("memo poisoned")
        .insert(key, prod.clone());
    Ok(prod)
}

/// `F_s^⊥ 𝔖_α = Σ_γ c^γ_{s,α} 𝔖_γ`.
///
/// The duality route needs the transitions in degree `|α|`, so it fails with
/// [`Error::DegreeCap`] above the cache's cap. The other two never touch the
/// cache.
pub fn skew_fundamental(
    s: usize,
    alpha: &Composition,
    method: SkewMethod,
    cache: &TransitionCache,
) -> Result<PieriExpansion> {
    positive(s)?;
    let mut terms = LinComb::zero();
    match method {
        SkewMethod::Theorem => {
            // every γ with a nonzero coefficient has a nonempty Z^γ, so the
            // candidates are the compactions of Z; coefficients come from the
            // closed form
            let mut seen = std::collections::BTreeSet::new();
            for beta in enumerate_z(s, alpha) {
                let gamma = alpha_minus(alpha, &beta)?;
                if seen.insert(gamma.clone()) {
                    terms.add_term(gamma.clone(), BigInt::from(coeff(s, alpha, &gamma)?));
                }
            }
        }
        SkewMethod::ZEnum => {
            for beta in enumerate_z(s, alpha) {
                terms.add_term(alpha_minus(alpha, &beta)?, BigInt::from(beta.sgn()));
            }
        }
        SkewMethod::Duality => {
            cache.check_degree(alpha.size())?;
            if alpha.size() >= s {
                let s_alpha = cache.immaculate(alpha);
                for gamma in compositions_of(alpha.size() - s) {
                    let prod = fs_times_dual(s, &gamma, cache)?;
                    terms.add_term(gamma, pairing(&s_alpha, &prod));
                }
            }
        }
    }
    Ok(PieriExpansion {
        s,
        alpha: alpha.clone(),
        terms,
    })
}

fn alpha_minus(alpha: &Composition, beta: &IntVector) -> Result<Composition> {
    let diff: Vec<i64> = alpha
        .parts()
        .iter()
        .zip(beta.entries())
        .map(|(&a, &b)| a as i64 - b)
        .collect();
    IntVector::new(diff).comp()
}

/// The formal expansion `F_r^⊥ 𝔖_α = Σ 𝔖_β` over `β ∈ ℤ^m` with
/// `i - m <= β_i <= α_i` and `|β| = |α| - r`.
pub fn skew_pieri_raw(r: usize, alpha: &Composition) -> RawExpansion {
    let a = signed_parts(alpha);
    let m = a.len() as i64;
    let lower: Vec<i64> = (1..=m).map(|i| i - m).collect();
    let mut min_suffix = vec![0i64; a.len() + 1];
    let mut max_suffix = vec![0i64; a.len() + 1];
    for i in (0..a.len()).rev() {
        min_suffix[i] = min_suffix[i + 1] + lower[i];
        max_suffix[i] = max_suffix[i + 1] + a[i];
    }

    let target = alpha.size() as i64 - r as i64;
    let mut terms = LinComb::zero();
    let mut acc = Vec::with_capacity(a.len());
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        left: i64,
        a: &[i64],
        lower: &[i64],
        min_suffix: &[i64],
        max_suffix: &[i64],
        acc: &mut Vec<i64>,
        terms: &mut LinComb<IntVector>,
    ) {
        if i == a.len() {
            if left == 0 {
                terms.add_term(IntVector::new(acc.clone()), BigInt::one());
            }
            return;
        }
        let lo = lower[i].max(left - max_suffix[i + 1]);
        let hi = a[i].min(left - min_suffix[i + 1]);
        for b in lo..=hi {
            acc.push(b);
            go(
                i + 1,
                left - b,
                a,
                lower,
                min_suffix,
                max_suffix,
                acc,
                terms,
            );
            acc.pop();
        }
    }
    go(
        0,
        target,
        &a,
        &lower,
        &min_suffix,
        &max_suffix,
        &mut acc,
        &mut terms,
    );
    RawExpansion {
        r,
        alpha: alpha.clone(),
        terms,
    }
}

/// `H_s 𝔖_α` in the immaculate basis:
/// `Σ_{r>=0} Σ_γ c^γ_{r,α} 𝔖_{[s+r, γ]}`, the `r = 0` term being `𝔖_{[s, α]}`.
pub fn left_pieri(s: usize, alpha: &Composition) -> Result<LinComb<Composition>> {
    positive(s)?;
    let mut out = LinComb::monomial(alpha.prepend(s)?);
    let unused = TransitionCache::new(0);
    for r in 1..=alpha.size() {
        let skew = skew_fundamental(r, alpha, SkewMethod::Theorem, &unused)?;
        for (gamma, c) in skew.terms {
            out.add_term(gamma.prepend(s + r)?, c);
        }
    }
    Ok(out)
}

/// `H_s 𝔖_α` multiplied out in `H` and converted back.
pub fn left_pieri_via_h(
    s: usize,
    alpha: &Composition,
    cache: &TransitionCache,
) -> Result<LinComb<Composition>> {
    positive(s)?;
    cache.check_degree(alpha.size() + s)?;
    let prod = h_mult(&NSymElem::h(Composition::row(s)?), &cache.immaculate(alpha));
    cache.h_to_immaculate(&prod)
}

/// `F_s 𝔖*_α` in the dual immaculate basis; the coefficient of `𝔖*_β` is the
/// coefficient of `𝔖_α` in `F_s^⊥ 𝔖_β`.
pub fn dual_pieri(s: usize, alpha: &Composition) -> Result<LinComb<Composition>> {
    positive(s)?;
    let m = alpha.len();
    let mut out = LinComb::zero();
    for beta in compositions_of(alpha.size() + s) {
        if beta.len() == m || beta.len() == m + 1 {
            out.add_term(beta.clone(), BigInt::from(coeff(s, &beta, alpha)?));
        }
    }
    Ok(out)
}

/// `F_s 𝔖*_α` multiplied out in `M` and converted back.
pub fn dual_pieri_via_qsym(
    s: usize,
    alpha: &Composition,
    cache: &TransitionCache,
) -> Result<LinComb<Composition>> {
    positive(s)?;
    cache.check_degree(alpha.size() + s)?;
    let prod = qsym_mult(
        &f_to_m(&Composition::row(s)?),
        &cache.dual_immaculate(alpha)?,
    );
    cache.m_to_dual_immaculate(&prod)
}

/// Both sides of `⟨𝔖_α, F_s 𝔖*_β⟩ = ⟨H_r 𝔖_α, 𝔖*_{(s+r, β)}⟩`, the left in
/// QSym and the right from [`left_pieri`].
pub fn transfer_check(
    r: usize,
    s: usize,
    alpha: &Composition,
    beta: &Composition,
    cache: &TransitionCache,
) -> Result<(BigInt, BigInt)> {
    positive(r)?;
    check_sizes(s, alpha, beta)?;
    let fs = f_to_m(&Composition::row(s)?);
    let left = pairing(
        &cache.immaculate(alpha),
        &qsym_mult(&fs, &cache.dual_immaculate(beta)?),
    );
    let right = left_pieri(r, alpha)?.coeff(&beta.prepend(s + r)?);
    Ok((left, right))
}

/// `F_s^⊥ 𝔖_λ` for a partition `λ`, where every coefficient is `0` or `1`.
pub fn partition_skew(s: usize, lambda: &Composition) -> Result<PieriExpansion> {
    positive(s)?;
    if !lambda.is_partition() {
        return Err(Error::NotPartition(lambda.to_string()));
    }
    let first = lambda.first().unwrap_or(0);
    let terms = if first < s {
        LinComb::zero()
    } else if first == s {
        LinComb::monomial(lambda.tail()?)
    } else {
        let unused = TransitionCache::new(0);
        let terms = skew_fundamental(s, lambda, SkewMethod::Theorem, &unused)?.terms;
        assert!(
            terms.iter().all(|(_, c)| c.is_one()),
            "negative coefficient in F_{s}^perp S_{lambda}"
        );
        terms
    };
    Ok(PieriExpansion {
        s,
        alpha: lambda.clone(),
        terms,
    })
}

/// Whether every coefficient is `±1`.
pub fn is_multiplicity_free<K: Ord + Clone>(terms: &LinComb<K>) -> bool {
    terms.iter().all(|(_, c)| c.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;

    fn v(entries: &[i64]) -> IntVector {
        IntVector::new(entries.to_vec())
    }

    fn lc(terms: &[(&[usize], i64)]) -> LinComb<Composition> {
        terms
            .iter()
            .map(|(p, c)| (Composition::new(p.to_vec()).unwrap(), BigInt::from(*c)))
            .collect()
    }

    fn cache() -> &'static TransitionCache {
        TransitionCache::global()
    }

    /// `Z_{s,α}` by filtering a box with the direct membership test.
    fn brute_z(s: usize, alpha: &Composition) -> Vec<IntVector> {
        let a = alpha.parts();
        let lo = -(s as i64) - alpha.size() as i64;
        let mut out = Vec::new();
        fn go(i: usize, lo: i64, a: &[usize], acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if i == a.len() {
                out.push(acc.clone());
                return;
            }
            for b in lo..=a[i] as i64 {
                acc.push(b);
                go(i + 1, lo, a, acc, out);
                acc.pop();
            }
        }
        let mut all = Vec::new();
        go(0, lo, a, &mut Vec::new(), &mut all);
        for b in all {
            let b = IntVector::new(b);
            if is_in_z(s, alpha, &b).unwrap() {
                out.push(b);
            }
        }
        out
    }

    #[test]
    fn membership_examples() {
        let a = composition![5, 1, 3, 7];
        for b in [v(&[1, 1, 0, 0]), v(&[1, -2, 3, 0]), v(&[1, -2, -4, 7])] {
            assert!(is_in_z(2, &a, &b).unwrap(), "{b}");
        }
        assert!(is_in_z(2, &composition![1, 4], &v(&[-1, 3])).unwrap());
        let a = composition![3, 1, 2];
        assert!(is_in_z(2, &a, &v(&[2, 0, 0])).unwrap());
        assert!(!is_in_z(2, &a, &v(&[1, 0, 1])).unwrap());
        assert!(!is_in_z(2, &a, &v(&[2, -1, 1])).unwrap());
        assert!(!is_in_z(2, &a, &v(&[2, -2, 2])).unwrap());
        assert!(!is_in_z(2, &a, &v(&[0, 0, 2])).unwrap());
        assert_eq!(
            is_in_z(2, &a, &v(&[2, 0])),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_z(2, &composition![2, 1]), vec![v(&[2, 0])]);
        assert!(enumerate_z(3, &composition![2, 1]).is_empty());
        let z = enumerate_z(2, &composition![5, 1, 3, 7]);
        for b in [v(&[1, 1, 0, 0]), v(&[1, -2, 3, 0]), v(&[1, -2, -4, 7])] {
            assert!(z.contains(&b));
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                for s in 1..=n + 1 {
                    assert_eq!(
                        enumerate_z(s, &alpha),
                        brute_z(s, &alpha),
                        "s={s} alpha={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn z_gamma_examples() {
        assert_eq!(
            enumerate_z_gamma(2, &composition![5, 1, 3, 7], &composition![4, 3, 7]).unwrap(),
            vec![v(&[1, 1, 0, 0]), v(&[1, -2, 3, 0]), v(&[1, -2, -4, 7])]
        );
        assert_eq!(
            enumerate_z_gamma(2, &composition![3, 1, 2], &composition![1, 1, 2]).unwrap(),
            vec![v(&[2, 0, 0])]
        );
        assert!(
            enumerate_z_gamma(2, &composition![3, 1, 1, 2], &composition![5])
                .unwrap()
                .is_empty()
        );
        assert!(enumerate_z_gamma(2, &composition![3, 1], &composition![3]).is_err());
    }

    #[test]
    fn anchors_for_312() {
        let a = composition![3, 1, 2];
        assert_eq!(
            ChainAnchor::new(&a, &composition![1, 3]),
            Some(ChainAnchor { k: 3, r: 3 })
        );
        assert_eq!(
            ChainAnchor::new(&a, &composition![2, 2]),
            Some(ChainAnchor { k: 2, r: 3 })
        );
        assert_eq!(
            ChainAnchor::new(&a, &composition![3, 1]),
            Some(ChainAnchor { k: 3, r: 3 })
        );
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(
            coeff(2, &composition![2, 2, 1, 2], &composition![2, 1, 2]).unwrap(),
            1
        );
        assert_eq!(
            coeff(2, &composition![1, 4, 2], &composition![2, 1, 2]).unwrap(),
            -1
        );
        assert_eq!(
            coeff(2, &composition![3, 1, 2], &composition![2, 2]).unwrap(),
            0
        );
        for g in [
            composition![1, 2, 1],
            composition![2, 1, 1],
            composition![1, 3],
            composition![3, 1],
        ] {
            assert_eq!(coeff(2, &composition![3, 1, 2], &g).unwrap(), 0, "{g}");
        }
        assert_eq!(
            coeff(2, &composition![5, 1, 3, 7], &composition![4, 3, 7]).unwrap(),
            1
        );
        assert!(coeff(2, &composition![3, 1], &composition![3]).is_err());
    }

    #[test]
    fn skew_examples_all_methods() {
        let cases: Vec<(Composition, LinComb<Composition>)> = vec![
            (composition![3, 1, 2], lc(&[(&[1, 1, 2], 1)])),
            (
                composition![3, 2, 2],
                lc(&[
                    (&[1, 2, 2], 1),
                    (&[2, 1, 2], 1),
                    (&[2, 2, 1], 1),
                    (&[3, 2], 1),
                ]),
            ),
            (composition![2, 1], lc(&[(&[1], 1)])),
        ];
        for (alpha, want) in cases {
            for method in SkewMethod::ALL {
                let got = skew_fundamental(2, &alpha, method, cache()).unwrap();
                assert_eq!(got.terms, want, "{method} on {alpha}");
            }
        }
    }

    #[test]
    fn theorem_formula_vanishes_off_the_candidates() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                for s in 1..=n {
                    let fast = skew_fundamental(s, &alpha, SkewMethod::Theorem, cache()).unwrap();
                    let full: LinComb<Composition> = compositions_of(n - s)
                        .into_iter()
                        .map(|g| {
                            let c = coeff(s, &alpha, &g).unwrap();
                            (g, BigInt::from(c))
                        })
                        .collect();
                    assert_eq!(fast.terms, full, "s={s} alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn three_methods_agree_small() {
        for n in 1..=5 {
            for alpha in compositions_of(n) {
                for s in 1..=n {
                    let t = skew_fundamental(s, &alpha, SkewMethod::Theorem, cache()).unwrap();
                    let z = skew_fundamental(s, &alpha, SkewMethod::ZEnum, cache()).unwrap();
                    let d = skew_fundamental(s, &alpha, SkewMethod::Duality, cache()).unwrap();
                    assert_eq!(t, z, "s={s} alpha={alpha}");
                    assert_eq!(t, d, "s={s} alpha={alpha}");
                    assert!(is_multiplicity_free(&t.terms));
                    for g in t.terms.keys() {
                        assert!(g.len() + 1 == alpha.len() || g.len() == alpha.len());
                    }
                }
            }
        }
    }

    #[test]
    fn duality_route_respects_the_cap() {
        let small = TransitionCache::new(3);
        assert_eq!(
            skew_fundamental(1, &composition![2, 2], SkewMethod::Duality, &small),
            Err(Error::DegreeCap { degree: 4, cap: 3 })
        );
        assert!(skew_fundamental(1, &composition![2, 2], SkewMethod::Theorem, &small).is_ok());
    }

    #[test]
    fn z_partitions_by_gamma() {
        for n in 1..=6 {
            for alpha in compositions_of(n) {
                for s in 1..=n {
                    let mut grouped: HashMap<Composition, Vec<IntVector>> = HashMap::new();
                    for b in enumerate_z(s, &alpha) {
                        grouped
                            .entry(alpha_minus(&alpha, &b).unwrap())
                            .or_default()
                            .push(b);
                    }
                    for gamma in compositions_of(n - s) {
                        let mut closed = enumerate_z_gamma(s, &alpha, &gamma).unwrap();
                        closed.sort();
                        let mut direct = grouped.remove(&gamma).unwrap_or_default();
                        direct.sort();
                        assert_eq!(closed, direct, "s={s} alpha={alpha} gamma={gamma}");
                    }
                    assert!(grouped.is_empty());
                }
            }
        }
    }

    #[test]
    fn raw_examples() {
        let raw = skew_pieri_raw(2, &composition![2, 1]);
        let want: LinComb<IntVector> = [v(&[0, 1]), v(&[1, 0])]
            .into_iter()
            .map(|b| (b, BigInt::one()))
            .collect();
        assert_eq!(raw.terms, want);
        let a = composition![3, 1, 2];
        assert_eq!(
            skew_pieri_raw(0, &a).terms,
            LinComb::monomial(IntVector::from(&a))
        );
        assert!(skew_pieri_raw(6, &a).terms.coeff(&v(&[0, 0, 0])).is_one());
    }

    #[test]
    fn raw_terms_respect_their_bounds() {
        for n in 0..=5 {
            for alpha in compositions_of(n) {
                let m = alpha.len() as i64;
                for r in 0..=n + 2 {
                    for (b, c) in skew_pieri_raw(r, &alpha).terms.iter() {
                        assert!(c.is_one());
                        assert_eq!(b.sum(), n as i64 - r as i64);
                        for (i, (&x, &p)) in b.entries().iter().zip(alpha.parts()).enumerate() {
                            assert!((i as i64 + 1 - m) <= x && x <= p as i64);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn left_pieri_examples() {
        assert_eq!(
            left_pieri(2, &composition![1, 4]).unwrap(),
            lc(&[
                (&[2, 1, 4], 1),
                (&[3, 2, 2], -1),
                (&[3, 3, 1], -1),
                (&[4, 2, 1], -1),
                (&[4, 3], -1),
                (&[5, 2], -1),
            ])
        );
        assert_eq!(
            left_pieri(3, &Composition::empty()).unwrap(),
            lc(&[(&[3], 1)])
        );
        // H_1 H_1 = H_11 and 𝔖_11 = H_11 - H_2
        assert_eq!(
            left_pieri(1, &composition![1]).unwrap(),
            lc(&[(&[1, 1], 1), (&[2], 1)])
        );
        assert_eq!(
            left_pieri_via_h(1, &composition![1], cache()).unwrap(),
            lc(&[(&[1, 1], 1), (&[2], 1)])
        );
    }

    #[test]
    fn dual_pieri_examples() {
        assert_eq!(
            dual_pieri(2, &composition![2, 1, 2]).unwrap(),
            lc(&[
                (&[1, 3, 1, 2], -1),
                (&[1, 4, 2], -1),
                (&[2, 2, 1, 2], 1),
                (&[3, 1, 1, 2], 1),
                (&[3, 2, 2], 1),
                (&[4, 1, 2], 1),
            ])
        );
        assert_eq!(
            dual_pieri(4, &Composition::empty()).unwrap(),
            lc(&[(&[4], 1)])
        );
        let oracle = dual_pieri_via_qsym(1, &composition![1], cache()).unwrap();
        assert_eq!(dual_pieri(1, &composition![1]).unwrap(), oracle);
        assert_eq!(oracle, lc(&[(&[1, 1], 1), (&[2], 1)]));
    }

    #[test]
    fn left_and_dual_pieri_match_their_oracles() {
        for n in 0..=4 {
            for alpha in compositions_of(n) {
                for s in 1..=(6 - n) {
                    assert_eq!(
                        left_pieri(s, &alpha).unwrap(),
                        left_pieri_via_h(s, &alpha, cache()).unwrap(),
                        "left s={s} alpha={alpha}"
                    );
                    assert_eq!(
                        dual_pieri(s, &alpha).unwrap(),
                        dual_pieri_via_qsym(s, &alpha, cache()).unwrap(),
                        "dual s={s} alpha={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn transfer_examples() {
        let (l, r) = transfer_check(1, 2, &composition![1, 4], &composition![3], cache()).unwrap();
        assert_eq!(l, r);
        let a = composition![2, 1];
        let (l, r) = transfer_check(1, 0, &a, &a, cache()).unwrap();
        assert_eq!((l, r), (BigInt::one(), BigInt::one()));
        assert!(transfer_check(
            2,
            2,
            &composition![2, 1, 2],
            &composition![2, 1, 2],
            cache()
        )
        .is_err());
    }

    #[test]
    fn partition_examples() {
        assert!(partition_skew(3, &composition![2, 1])
            .unwrap()
            .terms
            .is_zero());
        assert_eq!(
            partition_skew(2, &composition![2, 1]).unwrap().terms,
            lc(&[(&[1], 1)])
        );
        assert_eq!(
            partition_skew(2, &composition![3, 2, 2]).unwrap().terms,
            lc(&[
                (&[1, 2, 2], 1),
                (&[2, 1, 2], 1),
                (&[2, 2, 1], 1),
                (&[3, 2], 1)
            ])
        );
        assert!(matches!(
            partition_skew(2, &composition![1, 2]),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn json_shapes() {
        let e = skew_fundamental(2, &composition![3, 1, 2], SkewMethod::Theorem, cache()).unwrap();
        assert_eq!(
            e.to_json_value(SkewMethod::Theorem).to_string(),
            r#"{"op":"skew_fundamental","s":2,"alpha":[3,1,2],"method":"theorem","terms":[{"index":[1,1,2],"coeff":1}]}"#
        );
        let raw = skew_pieri_raw(2, &composition![2, 1]).to_json_value();
        assert_eq!(raw["formal"], json!(true));
        assert_eq!(raw["terms"][0]["index"], json!([0, 1]));
    }
}
