//! Exact rationals, polynomials, rational functions and the integrand parser.

mod function;
mod parse;
mod poly;

pub use function::RationalFunction;
pub use parse::{parse_expression, MAX_EXPONENT};
pub use poly::Polynomial;

use thiserror::Error;

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RatFunError {
    #[error("syntax error at offset {offset}: expected one of {}", expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("exponent at offset {offset} exceeds {}", MAX_EXPONENT)]
    ExponentTooLarge { offset: usize },
    #[error("evaluation at a pole (x = {x})")]
    PoleEvaluation { x: f64 },
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
