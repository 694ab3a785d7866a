//! Numeric special functions in `f64`: polylogarithms on the closed unit disk,
//! the Clausen function, Hurwitz and Riemann zeta, polygamma at rationals.

mod clausen;
mod polylog;
mod zeta;

pub use clausen::{catalan, clausen2, clausen2_pi};
pub use polylog::{dilog, polylog};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_direct, hurwitz_zeta_f64, polygamma, zeta};

use thiserror::Error;

pub type ComplexNumber = num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecFunError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of Li_1 at z = 1")]
    Pole,
}
