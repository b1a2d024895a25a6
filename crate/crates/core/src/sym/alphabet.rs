//! Formal alphabets for plethystic substitution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Var;
use crate::scalar::Scalar;
use crate::shapes::Partition;

use super::SymFunc;

/// An expression in the alphabet `X`, the parameters, the sign symbol `ε`
/// and constants. `p_r` acts on it as a ring morphism with
/// `p_r[X] = p_r`, `p_r[x] = x^r` for parameters and constants, and
/// `p_r[ε] = (−1)^r`.
#[derive(Clone, Debug, PartialEq)]
pub enum Alphabet {
    X,
    Param(Var),
    Epsilon,
    Const(Scalar),
    Add(Box<Alphabet>, Box<Alphabet>),
    Sub(Box<Alphabet>, Box<Alphabet>),
    Mul(Box<Alphabet>, Box<Alphabet>),
    /// Quotient by an alphabet free of `X`.
    Div(Box<Alphabet>, Box<Alphabet>),
}

impl Alphabet {
    pub fn x() -> Alphabet {
        Alphabet::X
    }

    pub fn param(v: Var) -> Alphabet {
        Alphabet::Param(v)
    }

    pub fn constant(s: Scalar) -> Alphabet {
        Alphabet::Const(s)
    }

    pub fn int(n: i64) -> Alphabet {
        Alphabet::Const(Scalar::from_int(n))
    }

    /// `X · s` for a scalar `s`; `p_r[X s] = p_r · s(q^r, t^r, z^r)`.
    pub fn x_times(s: Scalar) -> Alphabet {
        Alphabet::Mul(Box::new(Alphabet::X), Box::new(Alphabet::Const(s)))
    }

    pub fn div(self, other: Alphabet) -> Alphabet {
        Alphabet::Div(Box::new(self), Box::new(other))
    }

    pub fn contains_x(&self) -> bool {
        match self {
            Alphabet::X => true,
            Alphabet::Param(_) | Alphabet::Epsilon | Alphabet::Const(_) => false,
            Alphabet::Add(a, b) | Alphabet::Sub(a, b) | Alphabet::Mul(a, b) | Alphabet::Div(a, b) => {
                a.contains_x() || b.contains_x()
            }
        }
    }

    /// `p_r[A]` as a symmetric function.
    pub fn power_sum(&self, r: u32) -> Result<SymFunc<Scalar>> {
        Ok(match self {
            Alphabet::X => SymFunc::p(Partition::row(r)),
            Alphabet::Param(v) => SymFunc::constant(Scalar::param(*v).pow(r as i64)),
            Alphabet::Epsilon => SymFunc::constant(Scalar::from_int(if r.is_multiple_of(2) { 1 } else { -1 })),
            Alphabet::Const(s) => SymFunc::constant(s.adams(r)),
            Alphabet::Add(a, b) => a.power_sum(r)? + b.power_sum(r)?,
            Alphabet::Sub(a, b) => a.power_sum(r)? - b.power_sum(r)?,
            Alphabet::Mul(a, b) => a.power_sum(r)? * b.power_sum(r)?,
            Alphabet::Div(a, b) => {
                if b.contains_x() {
                    return Err(Error::UnboundedAlphabet(format!("division by {b}")));
                }
                let denom = b.power_sum(r)?.constant_term();
                let inv = denom.inv()?;
                a.power_sum(r)?.scale(&inv)
            }
        })
    }
}

impl From<Scalar> for Alphabet {
    fn from(s: Scalar) -> Self {
        Alphabet::Const(s)
    }
}

impl From<Var> for Alphabet {
    fn from(v: Var) -> Self {
        Alphabet::Param(v)
    }
}

impl Add for Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: Alphabet) -> Alphabet {
        Alphabet::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for Alphabet {
    type Output = Alphabet;
    fn sub(self, rhs: Alphabet) -> Alphabet {
        Alphabet::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for Alphabet {
    type Output = Alphabet;
    fn mul(self, rhs: Alphabet) -> Alphabet {
        Alphabet::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Neg for Alphabet {
    type Output = Alphabet;
    fn neg(self) -> Alphabet {
        Alphabet::Mul(Box::new(Alphabet::int(-1)), Box::new(self))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::X => f.write_str("X"),
            Alphabet::Param(v) => f.write_str(v.name()),
            Alphabet::Epsilon => f.write_str("ε"),
            Alphabet::Const(s) => write!(f, "({s})"),
            Alphabet::Add(a, b) => write!(f, "({a} + {b})"),
            Alphabet::Sub(a, b) => write!(f, "({a} - {b})"),
            Alphabet::Mul(a, b) => write!(f, "{a}*{b}"),
            Alphabet::Div(a, b) => write!(f, "{a}/{b}"),
        }
    }
}
