//! Sparse multivariate polynomials over ℤ in the three parameters `q`, `t`, `z`.
//!
//! Terms are kept sorted by the lexicographic order `q > t > z`, leading
//! term first. Exponents are packed into a single `u64` so that the packed
//! integer order coincides with the monomial order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One of the three formal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Z => "z",
        }
    }
}

const FIELD_BITS: u32 = 21;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;
const MAX_EXP: u32 = FIELD_MASK as u32;

/// A monomial `q^a t^b z^c` with packed exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(q: u32, t: u32, z: u32) -> Self {
        assert!(q <= MAX_EXP && t <= MAX_EXP && z <= MAX_EXP, "exponent overflow");
        Monomial(((q as u64) << (2 * FIELD_BITS)) | ((t as u64) << FIELD_BITS) | z as u64)
    }

    pub fn from_exps(e: [u32; 3]) -> Self {
        Self::new(e[0], e[1], e[2])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut ex = [0; 3];
        ex[v.index()] = e;
        Self::from_exps(ex)
    }

    pub fn exps(self) -> [u32; 3] {
        [
            ((self.0 >> (2 * FIELD_BITS)) & FIELD_MASK) as u32,
            ((self.0 >> FIELD_BITS) & FIELD_MASK) as u32,
            (self.0 & FIELD_MASK) as u32,
        ]
    }

    pub fn exp(self, v: Var) -> u32 {
        self.exps()[v.index()]
    }

    pub fn degree(self) -> u32 {
        self.exps().iter().sum()
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        let (a, b) = (self.exps(), other.exps());
        Monomial::new(a[0] + b[0], a[1] + b[1], a[2] + b[2])
    }

    /// `self / other` when every exponent of `other` is at most that of `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        let (a, b) = (self.exps(), other.exps());
        if a[0] < b[0] || a[1] < b[1] || a[2] < b[2] {
            return None;
        }
        Some(Monomial::new(a[0] - b[0], a[1] - b[1], a[2] - b[2]))
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let (a, b) = (self.exps(), other.exps());
        Monomial::new(a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2]))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let (a, b) = (self.exps(), other.exps());
        Monomial::new(a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2]))
    }

    fn without(self, v: Var) -> Monomial {
        let mut e = self.exps();
        e[v.index()] = 0;
        Monomial::from_exps(e)
    }
}

pub(crate) type Term = (Monomial, BigInt);

/// Polynomial in `q, t, z` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

fn merge(a: &[Term], b: &[Term], negate_b: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut v: Vec<Term> = terms.into_iter().filter(|t| !t.1.is_zero()).collect();
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first.0, |m, t| m.gcd(t.0)),
        }
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly { terms: merge(&self.terms, &other.terms, false) }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly { terms: merge(&self.terms, &other.terms, true) }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, m: Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(n, x)| (n.mul(m), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return other.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(other.terms[0].0, &other.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(*mb), ca * cb));
            }
        }
        Poly::from_terms(prods)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by a monomial-times-integer when the division is exact.
    pub fn div_term(&self, m: Monomial, c: &BigInt) -> Option<Poly> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (n, x) in &self.terms {
            let (qc, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push((n.div(m)?, qc));
        }
        Some(Poly { terms: out })
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?.clone();
        if divisor.terms.len() == 1 {
            return self.div_term(lm, &lc);
        }
        let mut quotient: Vec<Term> = Vec::new();
        let mut rem = self.terms.clone();
        while let Some((m, c)) = rem.first() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let sub = divisor.mul_term(qm, &qc);
            rem = merge(&rem, &sub.terms, true);
            quotient.push((qm, qc));
        }
        Some(Poly { terms: quotient })
    }

    /// Substitutes `x -> x^r` for every parameter.
    pub fn adams(&self, r: u32) -> Poly {
        if r == 1 {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = m.exps();
                    (Monomial::new(e[0] * r, e[1] * r, e[2] * r), c.clone())
                })
                .collect(),
        }
    }

    /// Coefficients of `self` as a polynomial in `v`; entry `k` multiplies `v^k`.
    pub fn to_univariate(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree(v) as usize;
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        // removing one variable from a lex-sorted list keeps each bucket sorted
        buckets.into_iter().map(|terms| Poly { terms }).collect()
    }

    pub fn from_univariate(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let vm = Monomial::var(v, k as u32);
            for (m, x) in &c.terms {
                terms.push((m.mul(vm), x.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Sign-normalized copy with a positive leading coefficient.
    pub fn normalize_sign(&self) -> Poly {
        if self.leading_coeff().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        let mut cache: [Vec<BigRational>; 3] = Default::default();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    let pw = &mut cache[i];
                    if pw.is_empty() {
                        pw.push(BigRational::one());
                    }
                    while pw.len() <= *e as usize {
                        let next = pw.last().unwrap() * &point[i];
                        pw.push(next);
                    }
                    v *= &pw[*e as usize];
                }
            }
            acc += v;
        }
        acc
    }

    pub fn eval_int(&self, point: &[BigInt; 3]) -> BigInt {
        let mut cache: [Vec<BigInt>; 3] = Default::default();
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    let pw = &mut cache[i];
                    if pw.is_empty() {
                        pw.push(BigInt::one());
                    }
                    while pw.len() <= *e as usize {
                        let next = pw.last().unwrap() * &point[i];
                        pw.push(next);
                    }
                    v *= &pw[*e as usize];
                }
            }
            acc += v;
        }
        acc
    }

    /// Greatest common divisor over ℤ[q,t,z], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let mono = self.monomial_content().gcd(other.monomial_content());
        let (ca, cb) = (self.content(), other.content());
        let c = ca.gcd(&cb);
        if self.is_monomial() || other.is_monomial() {
            return Poly::term(mono, c);
        }
        let a = self.div_term(self.monomial_content(), &ca).expect("content divides");
        let b = other.div_term(other.monomial_content(), &cb).expect("content divides");
        gcd_primitive(&a, &b).mul_term(mono, &c)
    }
}

fn univariate_content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
}

fn pseudo_remainder(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for x in r.iter_mut() {
            *x = lg.mul(x);
        }
        for (j, gj) in g.iter().enumerate() {
            r[j + shift] = r[j + shift].sub(&lr.mul(gj));
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

/// Gcd of two primitive polynomials with no monomial content.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return a.normalize_sign();
    }
    for v in Var::ALL {
        match (a.uses(v), b.uses(v)) {
            (true, false) => return univariate_content(&a.to_univariate(v)).gcd(b),
            (false, true) => return a.gcd(&univariate_content(&b.to_univariate(v))),
            _ => {}
        }
    }
    let v = Var::ALL
        .into_iter()
        .filter(|v| a.uses(*v))
        .min_by_key(|v| a.degree(*v).max(b.degree(*v)))
        .expect("non-constant polynomial uses a variable");
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = univariate_content(&ua);
    let cb = univariate_content(&ub);
    let content = ca.gcd(&cb);
    let pa: Vec<Poly> = ua.iter().map(|x| x.div_exact(&ca).expect("content divides")).collect();
    let pb: Vec<Poly> = ub.iter().map(|x| x.div_exact(&cb).expect("content divides")).collect();
    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    loop {
        let r = pseudo_remainder(&f, &g);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            g = vec![Poly::one()];
            break;
        }
        let rc = univariate_content(&r);
        let r: Vec<Poly> = r.iter().map(|x| x.div_exact(&rc).expect("content divides")).collect();
        f = g;
        g = r;
    }
    Poly::from_univariate(v, &g).mul(&content).normalize_sign()
}

/// Order used for printing: descending in `q`, then ascending in `t`, then in `z`.
pub(crate) fn render_order(a: &[i64; 3], b: &[i64; 3]) -> Ordering {
    b[0].cmp(&a[0]).then(a[1].cmp(&b[1])).then(a[2].cmp(&b[2]))
}

/// Renders a list of `(exponents, coefficient)` terms (exponents may be negative).
pub(crate) fn render_terms(mut terms: Vec<([i64; 3], BigRational)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|a, b| render_order(&a.0, &b.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for v in Var::ALL {
            let k = e[v.index()];
            match k {
                0 => {}
                1 => factors.push(v.name().to_string()),
                _ => factors.push(format!("{}^{}", v.name(), k)),
            }
        }
        let coeff = if mag.is_integer() { mag.numer().to_string() } else { format!("{}/{}", mag.numer(), mag.denom()) };
        if factors.is_empty() {
            out.push_str(&coeff);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exps();
                ([e[0] as i64, e[1] as i64, e[2] as i64], BigRational::from_integer(c.clone()))
            })
            .collect();
        f.write_str(&render_terms(terms))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(n)
    }

    #[test]
    fn lex_order_puts_q_first() {
        let p = t().pow(5).add(&q());
        assert_eq!(p.leading().unwrap().0, Monomial::var(Var::Q, 1));
    }

    #[test]
    fn exact_division() {
        let a = c(1).sub(&q().pow(2));
        let b = c(1).sub(&q());
        assert_eq!(a.div_exact(&b).unwrap(), c(1).add(&q()));
        assert!(b.div_exact(&a).is_none());
        assert!(a.div_exact(&c(1).add(&t())).is_none());
    }

    #[test]
    fn gcd_bivariate() {
        let common = q().sub(&t()).mul(&c(1).add(&q().mul(&t())));
        let a = common.mul(&q().add(&c(3)));
        let b = common.mul(&t().pow(2).sub(&c(2)));
        assert_eq!(a.gcd(&b), common.normalize_sign());
    }

    #[test]
    fn gcd_with_content_and_monomials() {
        let a = q().pow(2).mul(&c(6)).mul(&c(1).sub(&t()));
        let b = q().mul(&c(4)).mul(&c(1).sub(&t().pow(2)));
        let expected = q().mul(&c(2)).mul(&t().sub(&c(1))).normalize_sign();
        assert_eq!(a.gcd(&b), expected);
    }

    #[test]
    fn gcd_coprime() {
        let a = q().add(&t()).add(&Poly::var(Var::Z));
        let b = q().sub(&t());
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn render_matches_catalan_layout() {
        let p = q()
            .pow(3)
            .add(&q().pow(2).mul(&t()))
            .add(&q().mul(&t()))
            .add(&q().mul(&t().pow(2)))
            .add(&t().pow(3));
        assert_eq!(p.to_string(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
        assert_eq!(c(-2).add(&q()).to_string(), "q - 2");
    }
}
