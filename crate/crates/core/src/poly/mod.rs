//! Exact sparse polynomials over the rationals, plus dense rational linear
//! algebra used by the degree-slice oracles.

mod context;
mod matrix;
mod monomial;
mod polynomial;
mod slice;

use thiserror::Error;

pub use context::{Ctx, VariableContext};
pub use matrix::RationalMatrix;
pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{product, Polynomial};
pub use slice::{degree_slice_kernel, degree_slice_kernel_capped, SliceKernel, DEFAULT_SLICE_CAP};

pub(crate) use context::same_context;
pub(crate) use slice::graded_kernel;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable context must contain at least one name")]
    EmptyContext,
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("polynomials live in different rings ({left} vs {right})")]
    ContextMismatch { left: String, right: String },
    #[error("variable index {index} out of range for {n_vars} variables")]
    VariableOutOfRange { index: usize, n_vars: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds slice cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
}

#[cfg(test)]
pub(crate) fn parse_in(ctx: &Ctx, s: &str) -> Polynomial {
    crate::io::parse_polynomial(s, ctx).unwrap()
}
