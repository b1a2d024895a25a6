//! Symmetric functions with coefficients in a [`Coeff`] field.
//!
//! A [`SymFunc`] stores its terms in one of the five classical bases. All
//! algebra happens on the power-sum form, where products merge partitions,
//! the Hall scalar product is diagonal and ω is a sign. Results of algebraic
//! operations are therefore returned in the `p` basis; call
//! [`SymFunc::to_basis`] to change that.

mod alphabet;
pub(crate) mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use alphabet::Alphabet;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::Var;
use crate::scalar::Scalar;
use crate::shapes::Partition;
use transition::{merge, table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    M,
    E,
    H,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::M, Basis::E, Basis::H, Basis::S];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        match s {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis `{s}` (expected p, m, e, h or s)"))),
        }
    }
}

/// A finite linear combination of basis elements indexed by partitions.
#[derive(Clone)]
pub struct SymFunc<K> {
    basis: Basis,
    terms: BTreeMap<Partition, K>,
}

fn add_into<K: Coeff>(map: &mut BTreeMap<Partition, K>, key: Partition, c: K) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add_ref(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<K: Coeff> SymFunc<K> {
    pub fn zero() -> Self {
        SymFunc { basis: Basis::P, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::from_terms(Basis::P, [(Partition::empty(), c)])
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, K)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            add_into(&mut map, k, c);
        }
        SymFunc { basis, terms: map }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, K::one())])
    }

    pub fn p(lambda: Partition) -> Self {
        Self::basis_element(Basis::P, lambda)
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    /// `h_n`; zero for negative `n`, one for `n = 0`.
    pub fn h(n: i64) -> Self {
        if n < 0 {
            return Self::zero();
        }
        Self::basis_element(Basis::H, Partition::row(n as u32))
    }

    /// `e_n`; zero for negative `n`, one for `n = 0`.
    pub fn e(n: i64) -> Self {
        if n < 0 {
            return Self::zero();
        }
        Self::basis_element(Basis::E, Partition::row(n as u32))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, K> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> K {
        self.terms.get(lambda).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a stored term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    /// The degree-zero coefficient.
    pub fn constant_term(&self) -> K {
        self.coeff(&Partition::empty())
    }

    pub fn map_coeffs<L: Coeff>(&self, f: impl Fn(&K) -> L) -> SymFunc<L> {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    fn to_p(&self) -> SymFunc<K> {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        let mut cache: BTreeMap<u32, _> = BTreeMap::new();
        for (lam, c) in &self.terms {
            let t = cache.entry(lam.size()).or_insert_with(|| table(self.basis, lam.size()));
            for (j, v) in &t.to_p[t.index[lam]] {
                add_into(&mut out, t.parts[*j].clone(), c.mul_ref(&K::from_ratio(v)));
            }
        }
        SymFunc { basis: Basis::P, terms: out }
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc<K> {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_p();
        if target == Basis::P {
            return p;
        }
        let mut out = BTreeMap::new();
        let mut cache: BTreeMap<u32, _> = BTreeMap::new();
        for (mu, c) in &p.terms {
            let t = cache.entry(mu.size()).or_insert_with(|| table(target, mu.size()));
            for (j, v) in &t.from_p[t.index[mu]] {
                add_into(&mut out, t.parts[*j].clone(), c.mul_ref(&K::from_ratio(v)));
            }
        }
        SymFunc { basis: target, terms: out }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if other.terms.is_empty() {
            return self.clone();
        }
        if self.terms.is_empty() {
            return if negate { -other } else { other.clone() };
        }
        let (a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_p(), other.to_p())
        };
        let mut terms = a.terms;
        for (k, c) in b.terms {
            add_into(&mut terms, k, if negate { -c } else { c });
        }
        SymFunc { basis: a.basis, terms }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return SymFunc { basis: self.basis, terms: BTreeMap::new() };
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(c))).collect() }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let a = self.to_p();
        let b = other.to_p();
        let mut out = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                add_into(&mut out, merge(ka, kb), ca.mul_ref(cb));
            }
        }
        SymFunc { basis: Basis::P, terms: out }
    }

    /// Hall scalar product `⟨self, other⟩`.
    pub fn hall_inner(&self, other: &Self) -> K {
        let a = self.to_p();
        let b = other.to_p();
        let mut acc = K::zero();
        for (k, ca) in &a.terms {
            if let Some(cb) = b.terms.get(k) {
                let z = K::from_ratio(&BigRational::from_integer(k.z()));
                acc = acc.add_ref(&ca.mul_ref(cb).mul_ref(&z));
            }
        }
        acc
    }

    /// The involution `ω`, `ω p_λ = (−1)^{|λ|−ℓ(λ)} p_λ`.
    pub fn omega(&self) -> Self {
        let p = self.to_p();
        SymFunc {
            basis: Basis::P,
            terms: p
                .terms
                .into_iter()
                .map(|(k, c)| {
                    let odd = (k.size() as usize - k.len()) % 2 == 1;
                    (k, if odd { -c } else { c })
                })
                .collect(),
        }
    }

    /// The skewing operator: `self⊥ f`, adjoint to multiplication by `self`.
    pub fn perp(&self, f: &Self) -> Self {
        let g = self.to_p();
        let f = f.to_p();
        let mut out = BTreeMap::new();
        for (mu, cg) in &g.terms {
            let mm = mu.multiplicities();
            for (nu, cf) in &f.terms {
                if let Some((rest, factor)) = remove_parts(nu, &mm) {
                    let c = cg.mul_ref(cf).mul_ref(&K::from_ratio(&BigRational::from_integer(factor)));
                    add_into(&mut out, rest, c);
                }
            }
        }
        SymFunc { basis: Basis::P, terms: out }
    }

    /// Evaluation in `nvars` variables, as a map from exponent vectors to coefficients.
    pub fn to_monomials(&self, nvars: usize) -> Result<BTreeMap<Vec<u32>, K>> {
        let degree = self.degree().unwrap_or(0) as usize;
        if nvars < degree {
            return Err(Error::Lossy { nvars, degree });
        }
        let m = self.to_basis(Basis::M);
        let mut out = BTreeMap::new();
        for (lam, c) in &m.terms {
            if lam.len() > nvars {
                continue;
            }
            let mut exps: Vec<u32> = lam.parts().to_vec();
            exps.resize(nvars, 0);
            exps.sort_unstable();
            loop {
                out.insert(exps.clone(), c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn render_terms(&self) -> Vec<(Partition, String)> {
        self.terms.iter().map(|(k, c)| (k.clone(), c.to_string())).collect()
    }

    /// Structured dump: `{"basis": "s", "terms": [[[3,1], "q^2"], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .render_terms()
            .into_iter()
            .map(|(k, c)| serde_json::json!([k.parts(), c]))
            .collect();
        serde_json::json!({ "basis": self.basis.tag(), "terms": terms })
    }
}

/// Removes the multiset `m` (by multiplicities) from the parts of `nu`.
/// Returns the remainder and the factor `Π_k k^{m_k} m_k(ν)! / (m_k(ν)−m_k)!`.
fn remove_parts(nu: &Partition, m: &[u32]) -> Option<(Partition, BigInt)> {
    let mn = nu.multiplicities();
    let mut factor = BigInt::one();
    for (i, &cnt) in m.iter().enumerate() {
        if cnt == 0 {
            continue;
        }
        let have = mn.get(i).copied().unwrap_or(0);
        if have < cnt {
            return None;
        }
        let k = BigInt::from(i + 1);
        for j in 0..cnt {
            factor *= &k * BigInt::from(have - j);
        }
    }
    let mut rest = Vec::with_capacity(nu.len());
    let mut taken = m.to_vec();
    for &p in nu.parts() {
        let idx = p as usize - 1;
        if idx < taken.len() && taken[idx] > 0 {
            taken[idx] -= 1;
        } else {
            rest.push(p);
        }
    }
    Some((Partition::new(rest).expect("sub-multiset of a partition"), factor))
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `g⊥ f`.
pub fn skew<K: Coeff>(g: &SymFunc<K>, f: &SymFunc<K>) -> SymFunc<K> {
    g.perp(f)
}

impl SymFunc<Scalar> {
    /// `f[A]`: each `p_r` replaced by `p_r[A]`.
    pub fn plethysm(&self, a: &Alphabet) -> Result<SymFunc<Scalar>> {
        let p = self.to_p();
        let mut images: Vec<Option<SymFunc<Scalar>>> = Vec::new();
        let mut out = SymFunc::zero();
        for (mu, c) in &p.terms {
            let mut term = SymFunc::constant(c.clone());
            for &r in mu.parts() {
                let r = r as usize;
                if images.len() <= r {
                    images.resize(r + 1, None);
                }
                if images[r].is_none() {
                    images[r] = Some(a.power_sum(r as u32)?);
                }
                term = term.multiply(images[r].as_ref().expect("filled above"));
            }
            out = out.combine(&term, false);
        }
        Ok(out)
    }

    /// `f[X·s]` for a scalar `s`; diagonal on power sums.
    pub fn scale_alphabet(&self, s: &Scalar) -> SymFunc<Scalar> {
        let p = self.to_p();
        let mut powers: BTreeMap<u32, Scalar> = BTreeMap::new();
        let terms = p.terms.iter().map(|(mu, c)| {
            let mut k = c.clone();
            for &r in mu.parts() {
                let f = powers.entry(r).or_insert_with(|| s.adams(r));
                k = &k * f;
            }
            (mu.clone(), k)
        });
        let terms: Vec<_> = terms.collect();
        SymFunc::from_terms(Basis::P, terms)
    }

    /// Substitutes a parameter in every coefficient.
    pub fn subs(&self, v: Var, value: &Scalar) -> Result<SymFunc<Scalar>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            terms.push((k.clone(), c.subs(v, value)?));
        }
        Ok(SymFunc::from_terms(self.basis, terms))
    }

    /// Coefficient of `z^a`, coefficient-wise.
    pub fn z_coeff(&self, a: i64) -> Result<SymFunc<Scalar>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            terms.push((k.clone(), c.z_coeff(a)?));
        }
        Ok(SymFunc::from_terms(self.basis, terms))
    }
}

impl<K: Coeff> PartialEq for SymFunc<K> {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_p().terms == other.to_p().terms
    }
}

impl<K: Coeff> fmt::Display for SymFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = K::one().to_string();
        let minus_one = (-K::one()).to_string();
        for (i, (k, c)) in self.render_terms().into_iter().enumerate() {
            let (neg, body) = if c == one {
                (false, String::new())
            } else if c == minus_one {
                (true, String::new())
            } else if c.contains(' ') || c.contains('(') {
                (false, format!("({c})*"))
            } else if let Some(rest) = c.strip_prefix('-') {
                (true, format!("{rest}*"))
            } else {
                (false, format!("{c}*"))
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{body}{}{k}", self.basis.tag())?;
        }
        Ok(())
    }
}

impl<K: Coeff> fmt::Debug for SymFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

macro_rules! sym_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, K: Coeff> $tr<&'a SymFunc<K>> for &'a SymFunc<K> {
            type Output = SymFunc<K>;
            fn $method(self, rhs: &'a SymFunc<K>) -> SymFunc<K> {
                $body(self, rhs)
            }
        }
        impl<K: Coeff> $tr<SymFunc<K>> for SymFunc<K> {
            type Output = SymFunc<K>;
            fn $method(self, rhs: SymFunc<K>) -> SymFunc<K> {
                $body(&self, &rhs)
            }
        }
    };
}

sym_binop!(Add, add, |a: &SymFunc<K>, b: &SymFunc<K>| a.combine(b, false));
sym_binop!(Sub, sub, |a: &SymFunc<K>, b: &SymFunc<K>| a.combine(b, true));
sym_binop!(Mul, mul, |a: &SymFunc<K>, b: &SymFunc<K>| a.multiply(b));

impl<K: Coeff> Neg for SymFunc<K> {
    type Output = SymFunc<K>;
    fn neg(self) -> SymFunc<K> {
        SymFunc { basis: self.basis, terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Coeff> Neg for &SymFunc<K> {
    type Output = SymFunc<K>;
    fn neg(self) -> SymFunc<K> {
        -self.clone()
    }
}

impl<K: Coeff> One for SymFunc<K> {
    fn one() -> Self {
        SymFunc::one()
    }
}

impl<K: Coeff> Zero for SymFunc<K> {
    fn zero() -> Self {
        SymFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
