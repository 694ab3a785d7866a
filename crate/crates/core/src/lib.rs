//! Exact and numerical evaluation of `∫₀¹ R(x) logᵖx dx` for rational `R`.
//!
//! [`engine::integrate_closed_form`] gives the closed form; [`oracle`] checks it by quadrature.

pub mod ratfun;
pub mod factorize;
pub mod numeric;
pub mod specfun;
pub mod series;
pub mod oracle;
pub mod engine;
pub mod corpus;
pub mod cli;
