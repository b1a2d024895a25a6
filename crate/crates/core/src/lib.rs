//! Exact symmetric-function algebra for composition-indexed Hall–Littlewood
//! families, the Macdonald ∇ operator and touch-constrained Dyck paths.
//!
//! Coefficients live in [`Scalar`], the field of rational functions in
//! `q, t, z` over the integers. Symmetric functions are [`sym::SymFunc`],
//! generic over the coefficient field; [`Sym`] is the usual instance.

pub mod creation;
pub mod dyck;
pub mod error;
pub mod field;
pub mod linalg;
pub mod macdonald;
pub mod poly;
pub mod scalar;
pub mod shapes;
pub mod sym;
pub mod verify;

pub use error::{Error, Result};
pub use field::Coeff;
pub use poly::{Monomial, Poly, Var};
pub use scalar::Scalar;
pub use shapes::{Composition, Partition};
pub use sym::{Alphabet, Basis, SymFunc};

/// Symmetric functions over `ℚ(q, t, z)`.
pub type Sym = SymFunc<Scalar>;
/// Symmetric functions over the rationals.
pub type RationalSym = SymFunc<num_rational::BigRational>;
/// Symmetric functions with floating-point coefficients.
pub type FloatSym = SymFunc<f64>;
