//! Exact linear algebra over the rationals.

mod matrix;
mod scalar;

pub use matrix::{combine, quotient_dim, Matrix, SubspaceBasis};
pub use scalar::{q, qi, ParseScalarError, Scalar};
