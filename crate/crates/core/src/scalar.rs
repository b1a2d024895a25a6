//! Exact elements of ℚ(q, t, z).
//!
//! A [`Scalar`] is a reduced fraction of two integer polynomials. The
//! representation is canonical: numerator and denominator are coprime in
//! ℤ[q,t,z] (including the integer content) and the denominator's leading
//! coefficient under the lex order `q > t > z` is positive. Structural
//! equality is therefore mathematical equality.
//!
//! Negative powers of a parameter are just monomial denominators; those
//! values print as Laurent polynomials (`q^-3 - q^-2`).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{render_terms, Monomial, Poly, Var};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// `num / den`, reduced. Fails when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Scalar {
        Self::from_poly(Poly::constant(n))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Self::from_poly(Poly::constant(n))
    }

    pub fn from_ratio(r: &BigRational) -> Scalar {
        Self::reduce(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn param(v: Var) -> Scalar {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> Scalar {
        Self::param(Var::Q)
    }

    pub fn t() -> Scalar {
        Self::param(Var::T)
    }

    pub fn z() -> Scalar {
        Self::param(Var::Z)
    }

    /// `c · q^a t^b z^c` with possibly negative exponents.
    pub fn monomial(coeff: i64, exps: [i64; 3]) -> Scalar {
        let pos = exps.map(|e| e.max(0) as u32);
        let neg = exps.map(|e| (-e).max(0) as u32);
        Self::reduce(Poly::term(Monomial::from_exps(pos), coeff), Poly::term(Monomial::from_exps(neg), 1))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the denominator is a single term (a Laurent polynomial with rational coefficients).
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let e = e as u32;
        Scalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Image under `p_r`: every parameter `x` becomes `x^r`.
    pub fn adams(&self, r: u32) -> Scalar {
        if r == 1 {
            return self.clone();
        }
        let num = self.num.adams(r);
        let den = self.den.adams(r);
        if den.is_monomial() {
            Scalar { num, den }
        } else {
            Self::reduce(num, den)
        }
    }

    /// Substitutes `v -> value` in numerator and denominator.
    pub fn subs(&self, v: Var, value: &Scalar) -> Result<Scalar> {
        if !self.uses(v) {
            return Ok(self.clone());
        }
        let n = subs_poly(&self.num, v, value);
        let d = subs_poly(&self.den, v, value);
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at {}={}", self, v.name(), value)));
        }
        n.checked_div(&d)
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval(&self, point: &[BigRational; 3]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Coefficient of `z^a` of a Laurent polynomial in `z` over ℚ(q,t).
    pub fn z_coeff(&self, a: i64) -> Result<Scalar> {
        let lo = self.den.min_degree(Var::Z);
        if lo != self.den.degree(Var::Z) {
            return Err(Error::NotLaurentInZ(self.to_string()));
        }
        let den = self.den.div_term(Monomial::var(Var::Z, lo), &BigInt::one()).expect("z power divides");
        let k = a + lo as i64;
        if k < 0 {
            return Ok(Scalar::zero());
        }
        let coeffs = self.num.to_univariate(Var::Z);
        match coeffs.get(k as usize) {
            Some(c) => Ok(Self::reduce(c.clone(), den)),
            None => Ok(Scalar::zero()),
        }
    }

    /// Laurent terms `(exponents, coefficient)` when the denominator is a single term.
    pub fn laurent_terms(&self) -> Option<Vec<([i64; 3], BigRational)>> {
        let (dm, dc) = self.den.leading()?.clone();
        if !self.den.is_monomial() {
            return None;
        }
        let de = dm.exps();
        Some(
            self.num
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = m.exps();
                    (
                        [e[0] as i64 - de[0] as i64, e[1] as i64 - de[1] as i64, e[2] as i64 - de[2] as i64],
                        BigRational::new(c.clone(), dc.clone()),
                    )
                })
                .collect(),
        )
    }

    /// The value as a rational number when no parameter occurs.
    pub fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(self.num.constant_value()?, self.den.constant_value()?))
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        let rhs_num = if negate { other.num.neg() } else { other.num.clone() };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Scalar { num: rhs_num, den: other.den.clone() };
        }
        if self.den == other.den {
            if self.den.is_one() {
                return Scalar { num: self.num.add(&rhs_num), den: Poly::one() };
            }
            return Self::reduce(self.num.add(&rhs_num), self.den.clone());
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let (m1, c1) = self.den.leading().unwrap();
            let (m2, c2) = other.den.leading().unwrap();
            let m = m1.lcm(*m2);
            let c = c1.lcm(c2);
            let f1 = (m.div(*m1).unwrap(), &c / c1);
            let f2 = (m.div(*m2).unwrap(), &c / c2);
            let num = self.num.mul_term(f1.0, &f1.1).add(&rhs_num.mul_term(f2.0, &f2.1));
            return Self::reduce(num, Poly::term(m, c));
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&rhs_num.mul(&d1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let g2 = num.gcd(&g);
        let num = num.div_exact(&g2).expect("gcd divides");
        let den = d1.mul(&other.den.div_exact(&g2).expect("gcd divides"));
        if den.leading_coeff().is_negative() {
            Scalar { num: num.neg(), den: den.neg() }
        } else {
            Scalar { num, den }
        }
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar { num: self.num.mul(&other.num), den: Poly::one() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        if den.leading_coeff().is_negative() {
            Scalar { num: num.neg(), den: den.neg() }
        } else {
            Scalar { num, den }
        }
    }
}

fn subs_poly(p: &Poly, v: Var, value: &Scalar) -> Scalar {
    let coeffs = p.to_univariate(v);
    let mut acc = Scalar::zero();
    let mut power = Scalar::one();
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = &power * value;
        }
        if !c.is_zero() {
            acc += &(&Scalar::from_poly(c.clone()) * &power);
        }
    }
    acc
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| a.checked_div(b).expect("division by zero Scalar"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            return f.write_str(&render_terms(terms));
        }
        if self.num.is_monomial() {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("unexpected input at offset {} in `{}`", p.pos, s)));
        }
        Ok(v)
    }
}

/// Recursive-descent parser for `+ - * / ^`, parentheses, integers and `q`, `t`, `z`.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc *= &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?.to_i64().ok_or_else(|| self.err("exponent too large"))?;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Scalar::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Scalar::t())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Scalar::z())
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_bigint(self.integer()?)),
            _ => Err(self.err("expected a number, parameter or `(`")),
        }
    }
}

/// `(x; q)_k = (1 - x)(1 - q x)···(1 - q^{k-1} x)`.
pub fn pochhammer(x: &Scalar, k: u32) -> Scalar {
    let q = Scalar::q();
    let mut acc = Scalar::one();
    let mut qi = Scalar::one();
    for _ in 0..k {
        acc = &acc * &(Scalar::one() - &qi * x);
        qi = &qi * &q;
    }
    acc
}

/// Gaussian binomial `[n choose k]_q`; zero when `k` is outside `0..=n`.
pub fn q_binomial(n: u32, k: i64) -> Scalar {
    if k < 0 || k > n as i64 {
        return Scalar::zero();
    }
    let k = k as u32;
    let q = Scalar::q();
    let top = pochhammer(&q, n);
    let bottom = &pochhammer(&q, k) * &pochhammer(&q, n - k);
    top.checked_div(&bottom).expect("(q;q)_k is nonzero")
}

/// q-multinomial `(q;q)_k / ∏ (q;q)_{m_i}`; requires `Σ m_i = k`.
pub fn q_multinomial(k: u32, m: &[u32]) -> Result<Scalar> {
    let total: u32 = m.iter().sum();
    if total != k {
        return Err(Error::SizeMismatch(format!("multiplicities sum to {total}, expected {k}")));
    }
    let q = Scalar::q();
    let mut bottom = Scalar::one();
    for mi in m {
        bottom = &bottom * &pochhammer(&q, *mi);
    }
    pochhammer(&q, k).checked_div(&bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn field_identities() {
        assert_eq!(s("(1-q)") + s("q"), Scalar::one());
        assert_eq!(s("1/q") * s("q^3"), s("q^2"));
        assert_eq!(s("(1-q^2)/(1-q)"), s("1+q"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::q().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert!("1/(q-q)".parse::<Scalar>().is_err());
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = s("(2*q)/(-4)");
        assert_eq!(a, s("-q/2"));
        assert!(!a.denom().leading_coeff().is_negative());
        assert_eq!(s("(q - t)/(t - q)"), s("-1"));
    }

    #[test]
    fn laurent_display_round_trips() {
        let x = s("q^-3 - q^-2");
        assert_eq!(x.to_string(), "-q^-2 + q^-3");
        assert_eq!(s(&x.to_string()), x);
        let y = s("(1 + t)/(1 - q*t)");
        assert_eq!(s(&y.to_string()), y);
        assert_eq!(s("3/2*q*t^2").to_string(), "3/2*q*t^2");
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&Scalar::z(), 0), Scalar::one());
        assert_eq!(pochhammer(&Scalar::z(), 1), s("1 - z"));
        assert_eq!(pochhammer(&Scalar::z(), 3), s("(1-z)*(1-q*z)*(1-q^2*z)"));
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(3, 1), s("1 + q + q^2"));
        assert_eq!(q_binomial(5, 0), Scalar::one());
        assert_eq!(q_binomial(3, 4), Scalar::zero());
        assert_eq!(q_binomial(3, -1), Scalar::zero());
        assert!(q_binomial(6, 3).is_polynomial());
        assert_eq!(q_multinomial(2, &[2]).unwrap(), Scalar::one());
        assert!(q_multinomial(3, &[1, 1]).is_err());
    }

    #[test]
    fn binomial_at_q_one_is_integer_binomial() {
        for k in 0..=8u32 {
            for j in 0..=k {
                let v = q_binomial(k, j as i64).subs(Var::Q, &Scalar::one()).unwrap();
                let mut expect = BigInt::one();
                for i in 0..j {
                    expect = expect * BigInt::from(k - i) / BigInt::from(i + 1);
                }
                assert_eq!(v, Scalar::from_bigint(expect));
            }
        }
    }

    #[test]
    fn z_coefficients() {
        let x = s("(1 - z)*(1 + q/z)");
        assert_eq!(x.z_coeff(-1).unwrap(), s("q"));
        assert_eq!(x.z_coeff(0).unwrap(), s("1 - q"));
        assert_eq!(x.z_coeff(1).unwrap(), s("-1"));
        assert_eq!(x.z_coeff(2).unwrap(), Scalar::zero());
        assert!(s("1/(1-z)").z_coeff(0).is_err());
    }

    #[test]
    fn substitution_and_adams() {
        assert_eq!(s("q + 1/q").subs(Var::Q, &s("1/q")).unwrap(), s("q + 1/q"));
        assert_eq!(s("(1-q)/(1-t)").adams(2), s("(1-q^2)/(1-t^2)"));
        assert!(s("1/(1-q)").subs(Var::Q, &Scalar::one()).is_err());
    }
}
