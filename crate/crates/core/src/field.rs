//! Coefficient fields for symmetric functions.
//!
//! [`Coeff`] is the trait a coefficient type must satisfy for the generic
//! parts of the library (basis changes, products, scalar products,
//! plethysm by parameter-free alphabets). It is implemented for the exact
//! parameter field [`Scalar`], for plain rationals and for `f64`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Var;
use crate::scalar::Scalar;

pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn from_ratio(r: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(&BigRational::from_integer(BigInt::from(n)))
    }

    fn try_div(&self, other: &Self) -> Result<Self>;

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// Image of a constant under the power-sum substitution `p_r`.
    fn adams(&self, r: u32) -> Self;

    /// Rough size used to pick cheap pivots; smaller is simpler.
    fn weight(&self) -> usize {
        0
    }
}

/// Coefficients that carry the parameters q, t, z.
pub trait ParamCoeff: Coeff {
    fn param(v: Var) -> Self;
}

impl Coeff for Scalar {
    fn from_ratio(r: &BigRational) -> Self {
        Scalar::from_ratio(r)
    }

    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn adams(&self, r: u32) -> Self {
        Scalar::adams(self, r)
    }

    fn weight(&self) -> usize {
        self.numer().len() + self.denom().len()
    }
}

impl ParamCoeff for Scalar {
    fn param(v: Var) -> Self {
        Scalar::param(v)
    }
}

impl Coeff for BigRational {
    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn adams(&self, _r: u32) -> Self {
        self.clone()
    }
}

impl Coeff for f64 {
    fn from_ratio(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        if *other == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn adams(&self, _r: u32) -> Self {
        *self
    }
}
