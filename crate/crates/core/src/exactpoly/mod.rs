//! Exact integer polynomials and matrices: ring arithmetic, characteristic
//! polynomials, and real-root isolation. No floating point is involved in
//! any result produced here.

mod matrix;
mod poly;
mod roots;

use thiserror::Error;

pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use roots::{
    cauchy_bound, compare_max_roots, count_real_roots_with_multiplicity, eps_pow10,
    max_real_root, RootInterval, SturmSequence,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves remainder {remainder}")]
    NonZeroRemainder { remainder: IntPoly },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("precision must be positive")]
    NonPositiveEps,
}
