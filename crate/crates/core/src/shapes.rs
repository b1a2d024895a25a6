//! Partitions and compositions.
//!
//! The two are separate types: composition order matters for the operator
//! families, so a partition only becomes a composition through an explicit
//! [`From`] conversion.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

fn weighted_index_sum(parts: &[u32]) -> u64 {
    parts.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition; zeros are dropped.
    pub fn from_parts_sorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32).collect())
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_stat(&self) -> u64 {
        weighted_index_sum(&self.0)
    }

    /// `m[i]` is the number of parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// `M(λ) = Σ_i C(m_i + 1, 2)`.
    pub fn m_stat(&self) -> u64 {
        self.multiplicities().iter().map(|&m| binom2(m as u64 + 1)).sum()
    }

    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                acc *= BigInt::from(k) * BigInt::from(i + 1);
            }
        }
        acc
    }

    /// Dominance order: `self ≥ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether the diagram of `self` fits inside the diagram of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n` in reverse-lexicographic order (`(n)` first).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with exactly `k` parts, reverse-lexicographic.
    pub fn all_with_length(n: u32, k: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() == k).collect()
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `n(α) = Σ (i−1) α_i`.
    pub fn n_stat(&self) -> u64 {
        weighted_index_sum(&self.0)
    }

    /// Partial sums `α_1, α_1+α_2, …` excluding the total.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// The composition of `n` whose descent set is `des`.
    pub fn from_descents(n: u32, des: &BTreeSet<u32>) -> Result<Composition> {
        let mut parts = Vec::new();
        let mut last = 0;
        for &d in des {
            if d == 0 || d >= n || d <= last {
                return Err(Error::InvalidShape(format!("descent {d} invalid for size {n}")));
            }
            parts.push(d - last);
            last = d;
        }
        if n > 0 {
            parts.push(n - last);
        }
        Ok(Composition(parts))
    }

    /// `self ≤ other`: `self` is finer, i.e. `Des(other) ⊆ Des(self)`.
    pub fn refines(&self, other: &Composition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{self} and {other} have different sizes")));
        }
        Ok(other.descent_set().is_subset(&self.descent_set()))
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_parts_sorted(self.0.clone())
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all(n: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rem {
                cur.push(p);
                rec(rem - p, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }

    /// Compositions of `n` with exactly `k` parts, lexicographic.
    pub fn all_with_length(n: u32, k: usize) -> Vec<Composition> {
        Self::all(n).into_iter().filter(|c| c.len() == k).collect()
    }

    /// All `β ≤ self` (compositions finer than `self`), lexicographic.
    pub fn refinements(&self) -> Vec<Composition> {
        Self::all(self.size()).into_iter().filter(|b| b.refines(self).unwrap_or(false)).collect()
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    f.write_str("[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str("]")
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[a,b,...]`, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("`{}`: {e}", p.trim()))))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn statistics() {
        assert_eq!(comp(&[2, 1]).n_stat(), 1);
        assert_eq!(comp(&[1, 1, 1, 1]).n_stat(), 6);
        assert_eq!(comp(&[7]).n_stat(), 0);
        assert_eq!(part(&[2]).z(), BigInt::from(2));
        assert_eq!(part(&[1, 1]).z(), BigInt::from(2));
        assert_eq!(part(&[3, 2, 2, 1, 1, 1]).z(), BigInt::from(3 * 2 * 2 * 2 * 6));
        assert_eq!(part(&[2, 2, 1]).m_stat(), 4);
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(Partition::column(5).conjugate(), Partition::row(5));
        assert_eq!(part(&[4, 2, 1]).conjugate().conjugate(), part(&[4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn descents_and_refinement() {
        assert_eq!(comp(&[3, 5, 6]).descent_set(), BTreeSet::from([3, 8]));
        assert!(comp(&[3, 5, 6]).refines(&comp(&[8, 6])).unwrap());
        assert!(!comp(&[8, 6]).refines(&comp(&[3, 5, 6])).unwrap());
        assert!(comp(&[2, 2]).refines(&comp(&[2, 2])).unwrap());
        assert!(comp(&[2, 2]).refines(&comp(&[3])).is_err());
        assert_eq!(comp(&[1, 2, 3]).reverse(), comp(&[3, 2, 1]));
        let c = comp(&[3, 5, 6]);
        assert_eq!(Composition::from_descents(14, &c.descent_set()).unwrap(), c);
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(4)[0], part(&[4]));
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::all_with_length(4, 2), vec![comp(&[1, 3]), comp(&[2, 2]), comp(&[3, 1])]);
        assert_eq!(comp(&[2, 2]).refinements().len(), 4);
    }

    #[test]
    fn validation_and_text() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert_eq!("[3, 5,6]".parse::<Composition>().unwrap(), comp(&[3, 5, 6]));
        assert_eq!(comp(&[3, 5, 6]).to_string(), "[3,5,6]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(part(&[3, 1]).dominates(&part(&[2, 2])));
        assert!(!part(&[2, 2]).dominates(&part(&[3, 1])));
        assert!(!part(&[3, 1, 1, 1]).dominates(&part(&[2, 2, 2])));
        assert!(!part(&[2, 2, 2]).dominates(&part(&[3, 1, 1, 1])));
    }
}
