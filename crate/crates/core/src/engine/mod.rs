//! Exact closed forms for `∫₀¹ R(x)·logᵖx dx`.
//!
//! The rational function is split into partial fractions; each piece has a
//! known series whose value is a rational multiple of a constant symbol. The
//! symbols are then rewritten into a small canonical basis.

mod canonical;
mod render;

pub use canonical::{canonicalize, cot_derivative_poly, reflection_constant};
pub use render::{render, RenderStyle};

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::factorize::{partial_fractions, FactorizeError};
use crate::numeric::CompensatedSum;
use crate::oracle::{integrate_log_power, OracleError};
use crate::ratfun::{Rational, RationalFunction};
use crate::series::{periodic_sum, sine_profile, AlgebraicScalar};
use crate::specfun::{hurwitz_zeta, polylog, zeta};

/// A transcendental (or unit) constant appearing in closed forms.
///
/// The derived order is the render order: kind, then weight, then argument.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantSymbol {
    One,
    PiPow(u32),
    Zeta(u32),
    /// `ζ(m, q)`, `0 < q < 1`.
    HurwitzZeta(u32, Rational),
    /// `Li_m(x)`, `−1 ≤ x < 0`.
    PolyLogRational(u32, Rational),
    /// `Im Li_m(e^{it})`, `cos t = a`.
    UnitCircleLiIm(u32, Rational),
    /// `Re Li_m(e^{it})`, `cos t = a`.
    UnitCircleLiRe(u32, Rational),
}

impl ConstantSymbol {
    /// `ζ(m, q)`, with `q = 1` folded into `ζ(m)`.
    pub fn hurwitz(m: u32, q: Rational) -> Self {
        if q.is_one() {
            Self::Zeta(m)
        } else {
            Self::HurwitzZeta(m, q)
        }
    }

    pub fn numeric_value(&self) -> f64 {
        match self {
            Self::One => 1.0,
            Self::PiPow(k) => PI.powi(*k as i32),
            Self::Zeta(m) => zeta(*m),
            Self::HurwitzZeta(m, q) => hurwitz_zeta(*m, q).expect("argument in (0, 1)"),
            Self::PolyLogRational(m, x) => {
                polylog(*m, Complex64::new(x.to_f64().unwrap(), 0.0))
                    .expect("argument in [-1, 0)")
                    .re
            }
            Self::UnitCircleLiIm(m, a) => unit_circle_polylog(*m, a).im,
            Self::UnitCircleLiRe(m, a) => unit_circle_polylog(*m, a).re,
        }
    }

    pub(crate) fn is_psi(&self) -> bool {
        matches!(self, Self::HurwitzZeta(..))
    }
}

fn unit_circle_polylog(m: u32, a: &Rational) -> Complex64 {
    let t = a.to_f64().unwrap().acos();
    polylog(m, Complex64::from_polar(1.0, t)).expect("unit circle, weight >= 2")
}

/// `Σ coeff·√d·symbol`, one entry per `(symbol, d)`, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicValue {
    terms: BTreeMap<(ConstantSymbol, u64), Rational>,
}

impl SymbolicValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: AlgebraicScalar, symbol: ConstantSymbol) -> Self {
        let mut v = Self::zero();
        v.add_term(&coeff, symbol);
        v
    }

    pub fn rational(q: Rational) -> Self {
        Self::term(AlgebraicScalar::rational(q), ConstantSymbol::One)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: &AlgebraicScalar, symbol: ConstantSymbol) {
        if coeff.is_zero() {
            return;
        }
        let key = (symbol, coeff.d());
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff.q();
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        for (c, s) in rhs.terms() {
            self.add_term(&c, s.clone());
        }
    }

    pub fn scale(&self, c: &AlgebraicScalar) -> Self {
        let mut out = Self::zero();
        for (coeff, s) in self.terms() {
            let prod = coeff.checked_mul(c).expect("radicand fits in u64");
            out.add_term(&prod, s.clone());
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&AlgebraicScalar::rational(r.clone()))
    }

    /// Terms in render order.
    pub fn terms(&self) -> impl Iterator<Item = (AlgebraicScalar, &ConstantSymbol)> + '_ {
        self.terms
            .iter()
            .map(|((s, d), q)| (AlgebraicScalar::new(q.clone(), *d), s))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &ConstantSymbol> + '_ {
        self.terms.keys().map(|(s, _)| s)
    }

    /// Compensated sum of `coeff·value(symbol)`.
    pub fn numeric_value(&self) -> f64 {
        let mut sum = CompensatedSum::new();
        for (c, s) in self.terms() {
            sum.add(c.to_f64() * s.numeric_value());
        }
        sum.value()
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, RenderStyle::Ascii))
    }
}

/// Free-function form of [`SymbolicValue::numeric_value`].
pub fn numeric_value(v: &SymbolicValue) -> f64 {
    v.numeric_value()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Factorize(#[from] FactorizeError),
    #[error("linear factor x + {r} needs r >= 1 for the series representation")]
    UnsupportedPole { r: Rational },
    #[error("log power {p} has no closed form here (needs p >= 1)")]
    UnsupportedPower { p: u32 },
    #[error("quadratic factor with a = {a}: {reason}")]
    UnsupportedQuadratic { a: Rational, reason: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(−1)^p · p!`
fn signed_factorial(p: u32) -> Rational {
    let f = Rational::from_integer(factorial(p));
    if p % 2 == 0 {
        f
    } else {
        -f
    }
}

/// `∫₀¹ x^m logᵖx dx = (−1)^p p! / (m+1)^{p+1}`.
pub fn monomial_term(m: u32, p: u32) -> SymbolicValue {
    let denom = BigInt::from(m + 1).pow(p + 1);
    SymbolicValue::rational(signed_factorial(p) / Rational::from_integer(denom))
}

/// `∫₀¹ logᵖx/(x + r) dx = (−1)^{p+1} p! Li_{p+1}(−1/r)`, `r ≥ 1`.
pub fn linear_term(r: &Rational, p: u32) -> Result<SymbolicValue, EngineError> {
    if p == 0 {
        return Err(EngineError::UnsupportedPower { p });
    }
    if *r < Rational::one() {
        return Err(EngineError::UnsupportedPole { r: r.clone() });
    }
    let coeff = -signed_factorial(p);
    let v = SymbolicValue::term(
        AlgebraicScalar::rational(coeff),
        ConstantSymbol::PolyLogRational(p + 1, -r.recip()),
    );
    Ok(canonicalize(&v))
}

/// `∫₀¹ x^m logᵖx/(x² − 2ax + 1) dx = (−1)^p p! Σ_{k≥0} U_k(a)/(k+m+1)^{p+1}`.
///
/// `a ∈ {0, ±1/2}` reduces to Hurwitz zeta values at rational arguments; any
/// other `a` is left in terms of `Li_{p+1}(e^{it})`.
pub fn quadratic_term(a: &Rational, m: u32, p: u32) -> Result<SymbolicValue, EngineError> {
    if p == 0 {
        return Err(EngineError::UnsupportedPower { p });
    }
    let unsupported = |reason: &str| EngineError::UnsupportedQuadratic {
        a: a.clone(),
        reason: reason.to_string(),
    };
    if a.abs() >= Rational::one() {
        return Err(unsupported("needs |a| < 1"));
    }
    if m > 1 {
        return Err(unsupported("numerator degree must be 0 or 1"));
    }
    let w = p + 1;
    let sin_t = AlgebraicScalar::sqrt_of(&(Rational::one() - a * a))
        .ok_or_else(|| unsupported("squarefree part of 1 - a^2 not determined"))?;
    let inv_sin = sin_t.recip().unwrap();
    let sign = signed_factorial(p);
    let factor = inv_sin.scale(&sign);
    let mul = |c: &AlgebraicScalar| c.checked_mul(&factor).expect("radicand fits in u64");

    let mut v = SymbolicValue::zero();
    match crate::factorize::rational_angle(a) {
        Some(angle) => {
            // Σ_{k≥0} U_k(a)/(k+m+1)^w = (1/sin t) Σ_{k≥0} sin((k+1)t)/(k+m+1)^w
            let profile = sine_profile(&angle).expect("angle of a in {0, 1/2, -1/2}");
            let combo = periodic_sum(&profile, w, u64::from(m) + 1);
            for (c, q) in &combo.terms {
                v.add_term(&mul(c), ConstantSymbol::hurwitz(w, q.clone()));
            }
            for c in combo.correction_terms() {
                v.add_term(&mul(&c), ConstantSymbol::One);
            }
        }
        None => {
            // m = 0: Im Li_w(e^{it}) / sin t
            // m = 1: a·Im Li_w(e^{it}) / sin t − Re Li_w(e^{it})
            let im = if m == 0 { factor.clone() } else { factor.scale(a) };
            v.add_term(&im, ConstantSymbol::UnitCircleLiIm(w, a.clone()));
            if m == 1 {
                v.add_term(
                    &AlgebraicScalar::rational(-sign),
                    ConstantSymbol::UnitCircleLiRe(w, a.clone()),
                );
            }
        }
    }
    Ok(canonicalize(&v))
}

/// Exact closed form of `∫₀¹ f(x)·logᵖx dx`.
pub fn integrate_closed_form(f: &RationalFunction, p: u32) -> Result<SymbolicValue, EngineError> {
    if p == 0 {
        return Err(EngineError::UnsupportedPower { p });
    }
    if f.is_zero() {
        return Ok(SymbolicValue::zero());
    }
    let pf = partial_fractions(f)?;
    let mut total = SymbolicValue::zero();
    for (m, c) in pf.polynomial_part.coeffs().iter().enumerate() {
        if !c.is_zero() {
            total.add_assign(&monomial_term(m as u32, p).scale_rational(c));
        }
    }
    for t in &pf.linear_terms {
        total.add_assign(&linear_term(&t.factor.r, p)?.scale_rational(&t.numer));
    }
    for t in &pf.quadratic_terms {
        let a = &t.factor.a;
        if !t.b.is_zero() {
            total.add_assign(&quadratic_term(a, 1, p)?.scale_rational(&t.b));
        }
        if !t.c.is_zero() {
            total.add_assign(&quadratic_term(a, 0, p)?.scale_rational(&t.c));
        }
    }
    Ok(canonicalize(&total))
}

/// Closed form, its value, and the independent quadrature value side by side.
#[derive(Clone, Debug)]
pub struct EvaluationReport {
    pub input: RationalFunction,
    pub power: u32,
    pub closed_form: SymbolicValue,
    pub numeric: f64,
    pub oracle: f64,
    pub abs_disagreement: f64,
}

impl EvaluationReport {
    pub fn compute(f: &RationalFunction, p: u32, rel_tol: f64) -> Result<Self, EngineError> {
        let closed_form = integrate_closed_form(f, p)?;
        let numeric = closed_form.numeric_value();
        let oracle = integrate_log_power(f, p, rel_tol)?.value;
        Ok(Self {
            input: f.clone(),
            power: p,
            closed_form,
            numeric,
            oracle,
            abs_disagreement: (numeric - oracle).abs(),
        })
    }

    /// `|numeric − oracle| ≤ tol·(1 + |oracle|)`.
    pub fn agrees(&self, tol: f64) -> bool {
        self.abs_disagreement <= tol * (1.0 + self.oracle.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::{parse_expression, rat};

    fn closed(expr: &str, p: u32) -> SymbolicValue {
        integrate_closed_form(&parse_expression(expr).unwrap(), p).unwrap()
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_term(0, 0), SymbolicValue::rational(rat(1, 1)));
        assert_eq!(monomial_term(0, 1), SymbolicValue::rational(rat(-1, 1)));
        assert_eq!(monomial_term(2, 2), SymbolicValue::rational(rat(2, 27)));
    }

    #[test]
    fn linear_terms() {
        assert_eq!(linear_term(&rat(1, 1), 1).unwrap().to_string(), "-pi^2/12");
        assert_eq!(linear_term(&rat(1, 1), 2).unwrap().to_string(), "3*zeta(3)/2");
        let v = linear_term(&rat(2, 1), 1).unwrap();
        assert!((v.numeric_value() + 0.448414206923646202).abs() < 1e-14);
        assert!(matches!(linear_term(&rat(1, 2), 1), Err(EngineError::UnsupportedPole { .. })));
        assert!(matches!(linear_term(&rat(1, 1), 0), Err(EngineError::UnsupportedPower { p: 0 })));
    }

    #[test]
    fn quadratic_terms() {
        let j2 = quadratic_term(&rat(1, 2), 0, 2).unwrap();
        assert_eq!(j2.to_string(), "10*sqrt(3)*pi^3/243");
        assert!((j2.numeric_value() - 2.210059529375199642).abs() < 1e-13);
        let j3 = quadratic_term(&rat(1, 2), 1, 2).unwrap();
        assert!((j3.numeric_value() - 0.303658495914536964).abs() < 1e-13);
        assert_eq!(j3.to_string(), "(5*sqrt(3)*pi^3 - 162*zeta(3))/243");
        let j4 = quadratic_term(&rat(-1, 2), 0, 2).unwrap();
        assert_eq!(j4.to_string(), "8*sqrt(3)*pi^3/243");
        let cat = quadratic_term(&rat(0, 1), 0, 1).unwrap();
        assert!((cat.numeric_value() + 0.915965594177219015).abs() < 1e-14);
    }

    #[test]
    fn irrational_angle_quadratic() {
        // Σ U_k(1/3)/(k+1)² against a direct partial sum with tail ~ 1/N.
        let v = quadratic_term(&rat(1, 3), 0, 1).unwrap();
        let t = (1.0f64 / 3.0).acos();
        let direct: f64 = (0..2_000_000u64)
            .rev()
            .map(|k| ((k + 1) as f64 * t).sin() / t.sin() / ((k + 1) as f64).powi(2))
            .sum();
        assert!((v.numeric_value() + direct).abs() < 1e-6);
        assert!(v.symbols().all(|s| matches!(s, ConstantSymbol::UnitCircleLiIm(2, _))));
    }

    #[test]
    fn paper_integrals() {
        assert_eq!(closed("1/(x^2-x+1)", 1).to_string(), "2*pi^2/9 - (1/3)*psi'(1/3)");
        assert_eq!(closed("x/(x^2+x+1)", 1).to_string(), "-7*pi^2/54 + (1/9)*psi'(1/3)");
        assert_eq!(closed("x/(x^2-x+1)", 1).to_string(), "5*pi^2/36 - (1/6)*psi'(1/3)");
        assert_eq!(closed("1/(x^2+x+1)", 1).to_string(), "4*pi^2/27 - (2/9)*psi'(1/3)");
        assert_eq!(
            closed("(1-x)/(1-x^6)", 2).to_string(),
            "(8*sqrt(3)*pi^3 + 351*zeta(3))/486"
        );
        assert_eq!(
            closed("(1-x)/(1-x^6)", 4).to_string(),
            "(32*sqrt(3)*pi^5 + 16335*zeta(5))/1458"
        );
        assert_eq!(
            closed("(1-x)/(1-x^6)", 6).to_string(),
            "(1792*sqrt(3)*pi^7 + 9295965*zeta(7))/26244"
        );
    }

    #[test]
    fn zero_integrand() {
        assert!(closed("0", 3).is_zero());
        assert_eq!(SymbolicValue::zero().numeric_value(), 0.0);
    }

    #[test]
    fn polynomial_part() {
        // ∫ (x² + 1/(1+x)) log x = −1/9 − π²/12
        let v = closed("x^2 + 1/(1+x)", 1);
        assert!((v.numeric_value() - (-1.0 / 9.0 - PI * PI / 12.0)).abs() < 1e-14);
    }
}
