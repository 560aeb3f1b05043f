//! Exact symbolic algebra: Laurent polynomials, rational functions,
//! determinants and Pfaffians, and truncated series in a grading variable.

mod matrix;
mod parse;
mod poly;
mod ratfn;
mod series;

pub use matrix::{det, pfaffian, Matrix, Ring};
pub use poly::{LaurentPoly, Mono, Rational, Var, NV, NX};
pub use ratfn::RatFn;
pub use series::truncate_graded;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division is not exact")]
    NotDivisible,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator has no invertible grade-0 part")]
    NotExpandable,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Shorthand for a rational constant `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
