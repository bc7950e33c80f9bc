//! Compositions, integer vectors and descent sets.
//!
//! Compositions of a fixed size are totally ordered by the *canonical order*:
//! read the descent set as a binary number whose most significant bit is the
//! descent `1`, and sort ascending. This is the same as sorting the parts
//! lexicographically in decreasing order, so `[n]` comes first and `[1^n]`
//! last. Compositions of different sizes are ordered by size first. Every
//! matrix index and every printed expansion uses this order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest part or size accepted by the constructors.
pub const PART_CAP: usize = 1_000_000;

fn check_cap(value: usize) -> Result<()> {
    if value > PART_CAP {
        Err(Error::TooLarge {
            value: value as u64,
            cap: PART_CAP as u64,
        })
    } else {
        Ok(())
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
    size: usize,
}

/// Builds a composition from literal parts, panicking on invalid input.
#[macro_export]
macro_rules! composition {
    ($($part:expr),* $(,)?) => {
        $crate::Composition::new(vec![$($part),*]).expect("invalid composition literal")
    };
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut size = 0usize;
        for &p in &parts {
            if p == 0 {
                return Err(Error::ZeroPart);
            }
            check_cap(p)?;
            size += p;
            check_cap(size)?;
        }
        Ok(Self { parts, size })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-part composition `[n]`, or `[]` when `n = 0`.
    pub fn row(n: usize) -> Result<Self> {
        if n == 0 {
            Ok(Self::empty())
        } else {
            Self::new(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Weakly decreasing parts.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Drops the first part.
    pub fn tail(&self) -> Result<Self> {
        match self.parts.split_first() {
            None => Err(Error::EmptyTail),
            Some((first, rest)) => Ok(Self {
                parts: rest.to_vec(),
                size: self.size - first,
            }),
        }
    }

    /// `[first, self...]`.
    pub fn prepend(&self, first: usize) -> Result<Self> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Self::new(parts)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self {
            parts,
            size: self.size + other.size,
        }
    }

    pub fn sort_to_partition(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self {
            parts,
            size: self.size,
        }
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut elements = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0;
        for &p in self.parts.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            elements.push(acc);
        }
        DescentSet {
            n: self.size,
            elements,
        }
    }

    /// Refinement order: `self <= coarser` iff `D(coarser) ⊆ D(self)`.
    pub fn refines(&self, coarser: &Self) -> Result<bool> {
        if self.size != coarser.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: coarser.size,
            });
        }
        let fine = self.descent_set();
        Ok(coarser
            .descent_set()
            .elements
            .iter()
            .all(|d| fine.elements.binary_search(d).is_ok()))
    }

    /// Entrywise `self - other` for compositions of equal length.
    pub fn minus(&self, other: &Self) -> Result<IntVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(IntVector::new(
            self.parts
                .iter()
                .zip(&other.parts)
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect(),
        ))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_list(f, &self.parts)?;
        f.write_str("]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subset of `{1, ..., n-1}`, stored increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::InvalidDescent { descent: bad, n });
        }
        check_cap(n)?;
        Ok(Self { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn to_composition(&self) -> Composition {
        subset_to_composition(self)
    }
}

pub fn descent_set(alpha: &Composition) -> DescentSet {
    alpha.descent_set()
}

pub fn subset_to_composition(d: &DescentSet) -> Composition {
    if d.n == 0 {
        return Composition::empty();
    }
    let mut parts = Vec::with_capacity(d.elements.len() + 1);
    let mut prev = 0;
    for &e in d.elements.iter().chain(std::iter::once(&d.n)) {
        parts.push(e - prev);
        prev = e;
    }
    Composition { parts, size: d.n }
}

/// All compositions of `n` in canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let bits = n - 1;
    (0u64..(1u64 << bits))
        .map(|mask| {
            let elements = (1..n)
                .filter(|&i| mask & (1u64 << (bits - i)) != 0)
                .collect();
            subset_to_composition(&DescentSet { n, elements })
        })
        .collect()
}

/// All partitions of `n` (weakly decreasing compositions) in canonical order.
pub fn partitions_of(n: usize) -> Vec<Composition> {
    fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(acc.clone()).expect("positive parts"));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            acc.push(p);
            go(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A finite sequence of integers of any sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector {
    entries: Vec<i64>,
}

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Number of strictly negative entries.
    pub fn neg(&self) -> usize {
        self.entries.iter().filter(|&&x| x < 0).count()
    }

    /// `(-1)^neg`.
    pub fn sgn(&self) -> i32 {
        if self.neg().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Deletes zero entries. Negative entries are a caller bug.
    pub fn comp(&self) -> Result<Composition> {
        let mut parts = Vec::with_capacity(self.len());
        for &x in &self.entries {
            match x.cmp(&0) {
                Ordering::Less => return Err(Error::NegativeEntry(x)),
                Ordering::Equal => {}
                Ordering::Greater => parts.push(x as usize),
            }
        }
        Composition::new(parts)
    }
}

impl From<&Composition> for IntVector {
    fn from(c: &Composition) -> Self {
        Self::new(c.parts().iter().map(|&p| p as i64).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.entries)?;
        f.write_str(")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
