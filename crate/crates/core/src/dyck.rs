//! Dyck paths in arm-sequence form, their statistics, parking words and the
//! combinatorial q,t-sums attached to a composition.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;
use crate::shapes::Composition;

/// A Dyck path of size `n`, stored as its arm sequence: the number of full
/// cells between the path and the diagonal in each row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyckPath {
    arm: Vec<u32>,
}

impl DyckPath {
    /// Validates `a₁ = 0` and `0 ≤ a_{i+1} ≤ a_i + 1`.
    pub fn new(arm: Vec<u32>) -> Result<Self> {
        if let Some(&first) = arm.first() {
            if first != 0 {
                return Err(Error::InvalidShape(format!("arm sequence must start at 0: {arm:?}")));
            }
        }
        if arm.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidShape(format!("arm sequence rises by more than 1: {arm:?}")));
        }
        Ok(DyckPath { arm })
    }

    pub fn arm(&self) -> &[u32] {
        &self.arm
    }

    pub fn size(&self) -> usize {
        self.arm.len()
    }

    pub fn area(&self) -> u64 {
        self.arm.iter().map(|&a| a as u64).sum()
    }

    pub fn dinv(&self) -> u64 {
        let a = &self.arm;
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] == a[j] || a[i] == a[j] + 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Block sizes between consecutive rows with arm 0.
    pub fn touch(&self) -> Composition {
        let mut parts = Vec::new();
        for &a in &self.arm {
            if a == 0 {
                parts.push(1);
            } else {
                *parts.last_mut().expect("arm starts at 0") += 1;
            }
        }
        Composition::new(parts).expect("touch blocks are positive")
    }

    /// `Σ_k (ℓ(α) − k) r_k` where `r_k` counts rows with arm 0 inside block `k`
    /// of `α`. Needs `touch(D) ≤ α`.
    pub fn doff(&self, alpha: &Composition) -> Result<u64> {
        let touch = self.touch();
        if !touch.refines(alpha)? {
            return Err(Error::NotRefined { touch: touch.to_string(), alpha: alpha.to_string() });
        }
        let len = alpha.len() as u64;
        let mut row = 0;
        let mut total = 0;
        for (k, &block) in alpha.parts().iter().enumerate() {
            let zeros = self.arm[row..row + block as usize].iter().filter(|&&a| a == 0).count() as u64;
            total += (len - 1 - k as u64) * zeros;
            row += block as usize;
        }
        Ok(total)
    }

    /// Component-wise comparison of arm sequences.
    pub fn leq(&self, other: &DyckPath) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("paths of size {} and {}", self.size(), other.size())));
        }
        Ok(self.arm.iter().zip(&other.arm).all(|(a, b)| a <= b))
    }

    /// The staircase path whose arm sequence is `(0, 1, …, α_i − 1)` per part.
    pub fn dp_of(alpha: &Composition) -> DyckPath {
        DyckPath { arm: alpha.parts().iter().flat_map(|&p| 0..p).collect() }
    }

    fn check_word(&self, w: &[u32]) -> Result<()> {
        let n = self.size() as u32;
        let bad = || Error::IncompatibleWord { word: format!("{w:?}"), path: format!("{:?}", self.arm) };
        if w.len() != self.size() || w.iter().any(|&x| x == 0 || x > n) {
            return Err(bad());
        }
        for i in 1..w.len() {
            if self.arm[i - 1] < self.arm[i] && w[i - 1] >= w[i] {
                return Err(bad());
            }
        }
        Ok(())
    }

    /// Words over `{1..n}` that increase across every rise of the arm sequence,
    /// in lexicographic order.
    pub fn words(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        self.for_each_word(|w| out.push(w.to_vec()));
        out
    }

    fn for_each_word(&self, mut visit: impl FnMut(&[u32])) {
        let n = self.size();
        if n == 0 {
            visit(&[]);
            return;
        }
        let mut w = vec![0u32; n];
        fn rec(arm: &[u32], w: &mut Vec<u32>, i: usize, visit: &mut dyn FnMut(&[u32])) {
            let n = arm.len() as u32;
            if i == arm.len() {
                visit(w);
                return;
            }
            let lo = if i > 0 && arm[i - 1] < arm[i] { w[i - 1] + 1 } else { 1 };
            for x in lo..=n {
                w[i] = x;
                rec(arm, w, i + 1, visit);
            }
        }
        rec(&self.arm, &mut w, 0, &mut visit);
    }

    /// Pairs `i < j` with `a_i = a_j, w_i < w_j` or `a_i = a_j + 1, w_i > w_j`.
    pub fn dinv_word(&self, w: &[u32]) -> Result<u64> {
        self.check_word(w)?;
        Ok(self.dinv_word_unchecked(w))
    }

    fn dinv_word_unchecked(&self, w: &[u32]) -> u64 {
        let a = &self.arm;
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if (a[i] == a[j] && w[i] < w[j]) || (a[i] == a[j] + 1 && w[i] > w[j]) {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arm.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which paths [`enumerate_paths`] emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathFilter {
    All,
    /// `touch(D) = α`.
    TouchEq(Composition),
    /// `D ≤ DP(α)`.
    Below(Composition),
}

/// All Dyck paths of size `n` passing the filter, in lexicographic order of
/// arm sequences.
pub fn enumerate_paths(n: u32, filter: &PathFilter) -> Result<Vec<DyckPath>> {
    let n = n as usize;
    // Per-row bounds: `zero[i]` forces (Some(true)) or forbids (Some(false))
    // a zero arm; `cap[i]` bounds the arm from above.
    let mut zero: Vec<Option<bool>> = vec![None; n];
    let mut cap: Vec<u32> = vec![u32::MAX; n];
    match filter {
        PathFilter::All => {}
        PathFilter::TouchEq(alpha) | PathFilter::Below(alpha) => {
            if alpha.size() as usize != n {
                return Err(Error::SizeMismatch(format!("composition {alpha} is not of size {n}")));
            }
            if let PathFilter::TouchEq(_) = filter {
                let mut starts = vec![false; n];
                let mut row = 0;
                for &p in alpha.parts() {
                    starts[row] = true;
                    row += p as usize;
                }
                zero = starts.into_iter().map(Some).collect();
            } else {
                cap = DyckPath::dp_of(alpha).arm;
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(DyckPath { arm: Vec::new() });
        return Ok(out);
    }
    let mut arm = vec![0u32; n];
    fn rec(i: usize, arm: &mut Vec<u32>, zero: &[Option<bool>], cap: &[u32], out: &mut Vec<DyckPath>) {
        if i == arm.len() {
            out.push(DyckPath { arm: arm.clone() });
            return;
        }
        let hi = if i == 0 { 0 } else { arm[i - 1] + 1 }.min(cap[i]);
        let (lo, hi) = match zero[i] {
            Some(true) => (0, 0),
            Some(false) => (1, hi),
            None => (0, hi),
        };
        for a in lo..=hi {
            arm[i] = a;
            rec(i + 1, arm, zero, cap, out);
        }
    }
    rec(0, &mut arm, &zero, &cap, &mut out);
    Ok(out)
}

/// The four combinatorial sums attached to a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `Σ_{D ≤ DP(α)} t^{area} q^{dinv + doff_α}`
    BScalar,
    /// `Σ_{touch(D) = α} t^{area} q^{dinv}`
    CScalar,
    /// `Σ_{D ≤ DP(α)} Σ_w t^{area(D)} q^{dinv(w) + doff_α(D)} x^w`
    BMonomial,
    /// `Σ_{touch(D) = α} Σ_w t^{area(D)} q^{dinv(w)} x^w`
    CMonomial,
}

/// Result of [`combinatorial_side`].
#[derive(Clone, Debug, PartialEq)]
pub enum Side {
    Scalar(Scalar),
    /// Exponent vector of length `n` to coefficient.
    Monomials(BTreeMap<Vec<u32>, Scalar>),
}

fn qt(q: u64, t: u64) -> Poly {
    Poly::term(Monomial::new(q as u32, t as u32, 0), 1)
}

pub fn combinatorial_side(alpha: &Composition, flavor: Flavor) -> Result<Side> {
    let n = alpha.size();
    let b_side = matches!(flavor, Flavor::BScalar | Flavor::BMonomial);
    let filter = if b_side { PathFilter::Below(alpha.clone()) } else { PathFilter::TouchEq(alpha.clone()) };
    let paths = enumerate_paths(n, &filter)?;
    match flavor {
        Flavor::BScalar | Flavor::CScalar => {
            let mut acc = Poly::zero();
            for d in &paths {
                let extra = if b_side { d.doff(alpha)? } else { 0 };
                acc = acc.add(&qt(d.dinv() + extra, d.area()));
            }
            Ok(Side::Scalar(Scalar::from_poly(acc)))
        }
        Flavor::BMonomial | Flavor::CMonomial => {
            let mut acc: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
            for d in &paths {
                let extra = if b_side { d.doff(alpha)? } else { 0 };
                let area = d.area();
                d.for_each_word(|w| {
                    let mut exps = vec![0u32; n as usize];
                    for &x in w {
                        exps[x as usize - 1] += 1;
                    }
                    let term = qt(d.dinv_word_unchecked(w) + extra, area);
                    let slot = acc.entry(exps).or_insert_with(Poly::zero);
                    *slot = slot.add(&term);
                });
            }
            Ok(Side::Monomials(
                acc.into_iter().filter(|(_, p)| !p.is_zero()).map(|(k, p)| (k, Scalar::from_poly(p))).collect(),
            ))
        }
    }
}

/// `Σ_D t^{area} q^{dinv}` over all paths of size `n`.
pub fn qt_catalan_paths(n: u32) -> Scalar {
    let paths = enumerate_paths(n, &PathFilter::All).expect("unconstrained enumeration");
    Scalar::from_poly(paths.iter().fold(Poly::zero(), |acc, d| acc.add(&qt(d.dinv(), d.area()))))
}

/// The Catalan number `C_n`.
pub fn catalan(n: u32) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn path(v: &[u32]) -> DyckPath {
        DyckPath::new(v.to_vec()).unwrap()
    }

    #[test]
    fn statistics_examples() {
        for (arm, area, dinv) in [(&[0, 0, 0, 0, 0][..], 0, 10), (&[0, 1, 2, 2, 1], 6, 4), (&[0, 1, 0, 1, 0], 2, 7)] {
            let d = path(arm);
            assert_eq!((d.area(), d.dinv()), (area, dinv), "{d}");
        }
    }

    #[test]
    fn touch_and_doff_example() {
        let d = path(&[0, 1, 2, 0, 1, 2, 2, 1, 0, 1, 2, 3, 2, 1]);
        assert_eq!(d.touch(), comp(&[3, 5, 6]));
        assert_eq!(d.doff(&comp(&[8, 6])).unwrap(), 2);
        assert_eq!(d.doff(&comp(&[14])).unwrap(), 0);
        assert!(matches!(d.doff(&comp(&[2, 12])), Err(Error::NotRefined { .. })));
    }

    #[test]
    fn invalid_arms() {
        assert!(DyckPath::new(vec![1, 2]).is_err());
        assert!(DyckPath::new(vec![0, 2]).is_err());
    }

    #[test]
    fn staircase() {
        let a = comp(&[3, 5, 6]);
        let d = DyckPath::dp_of(&a);
        assert_eq!(d.arm(), &[0, 1, 2, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 5]);
        assert_eq!(d.touch(), a);
        assert_eq!(d.doff(&a).unwrap(), 3);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_paths(5, &PathFilter::All).unwrap().len(), 42);
        for n in 1..=7 {
            assert_eq!(enumerate_paths(n, &PathFilter::All).unwrap().len() as u64, catalan(n));
            assert_eq!(enumerate_paths(n, &PathFilter::TouchEq(comp(&[n]))).unwrap().len() as u64, catalan(n - 1));
        }
        for a in Composition::all(6) {
            let want: u64 = a.parts().iter().map(|&p| catalan(p - 1)).product();
            assert_eq!(enumerate_paths(6, &PathFilter::TouchEq(a.clone())).unwrap().len() as u64, want, "{a}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_paths(6, &PathFilter::All).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for d in &all {
            assert_eq!(DyckPath::new(d.arm().to_vec()).unwrap(), *d);
        }
    }

    #[test]
    fn order_compatibility() {
        let all = enumerate_paths(5, &PathFilter::All).unwrap();
        for d1 in &all {
            for d2 in &all {
                if d1.leq(d2).unwrap() {
                    assert!(d1.touch().refines(&d2.touch()).unwrap(), "{d1} <= {d2}");
                }
            }
        }
    }

    #[test]
    fn below_staircase_refines_and_doff_depends_on_touch() {
        for n in 1..=6 {
            let all = enumerate_paths(n, &PathFilter::All).unwrap();
            for a in Composition::all(n) {
                let below = enumerate_paths(n, &PathFilter::Below(a.clone())).unwrap();
                let staircase = DyckPath::dp_of(&a);
                let brute: Vec<_> = all.iter().filter(|d| d.leq(&staircase).unwrap()).cloned().collect();
                assert_eq!(below, brute);
                for d in &below {
                    assert!(d.touch().refines(&a).unwrap());
                }
                let mut by_touch: BTreeMap<Composition, u64> = BTreeMap::new();
                for d in all.iter().filter(|d| d.touch().refines(&a).unwrap()) {
                    let v = d.doff(&a).unwrap();
                    assert_eq!(*by_touch.entry(d.touch()).or_insert(v), v);
                }
            }
        }
    }

    #[test]
    fn partition_by_touch() {
        for n in 1..=7 {
            let all = enumerate_paths(n, &PathFilter::All).unwrap();
            let mut union: Vec<DyckPath> =
                Composition::all(n).into_iter().flat_map(|a| enumerate_paths(n, &PathFilter::TouchEq(a)).unwrap()).collect();
            union.sort();
            assert_eq!(union, all);
        }
    }

    #[test]
    fn word_dinv() {
        let d = path(&[0, 0, 0, 0]);
        assert_eq!(d.dinv_word(&[4, 3, 2, 1]).unwrap(), 0);
        assert_eq!(d.dinv_word(&[1, 2, 3, 4]).unwrap(), 6);
        assert_eq!(d.words().len(), 256);
        let e = path(&[0, 1]);
        assert!(matches!(e.dinv_word(&[2, 1]), Err(Error::IncompatibleWord { .. })));
        assert!(e.words().iter().all(|w| w[0] < w[1]));
    }

    #[test]
    fn touch_three_scalar() {
        let Side::Scalar(s) = combinatorial_side(&comp(&[3]), Flavor::CScalar).unwrap() else { panic!() };
        assert_eq!(s, "q*t^2 + t^3".parse().unwrap());
        let total = Composition::all(3).iter().fold(Scalar::from_int(0), |acc, a| {
            let Side::Scalar(s) = combinatorial_side(a, Flavor::CScalar).unwrap() else { panic!() };
            acc + s
        });
        assert_eq!(total.to_string(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
    }
}
