//! Chebyshev-U sequences and the regrouping of periodic sine sums into
//! Hurwitz zeta values at `j/P`.
//!
//! For `a = cos t ∈ {0, ±1/2}` the angle `t/π` is rational, `sin(n·t)` is
//! periodic in `n`, and
//!
//! ```text
//! Σ_{n≥1} c(n)/n^w = P^{−w} Σ_{j=1}^{P} c(j)·ζ(w, j/P)
//! ```
//!
//! for any `P`-periodic coefficient sequence `c`.

mod algebraic;

pub use algebraic::AlgebraicScalar;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::factorize::rational_angle;
use crate::numeric::CompensatedSum;
use crate::ratfun::{rat, Rational};
use crate::specfun::hurwitz_zeta;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("no exact sine profile for angle pi*{0}")]
    UnsupportedAngle(Rational),
}

/// `U_k(a)` by the three-term recurrence, exactly.
pub fn chebyshev_u(k: usize, a: &Rational) -> Rational {
    let two_a = Rational::from_integer(2.into()) * a;
    let (mut prev, mut cur) = (Rational::one(), two_a.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &two_a * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact values `sin(j·t)`, `j = 1..=period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinePeriodProfile {
    pub period: usize,
    pub values: Vec<AlgebraicScalar>,
}

impl SinePeriodProfile {
    /// `sin(n·t)` for any integer `n` (periodic extension).
    pub fn value(&self, n: i64) -> &AlgebraicScalar {
        let p = self.period as i64;
        &self.values[((n - 1).rem_euclid(p)) as usize]
    }
}

/// Sine profile for `t = π·r`, `r ∈ {1/2, 1/3, 2/3}`.
pub fn sine_profile(angle: &Rational) -> Result<SinePeriodProfile, SeriesError> {
    let a = [rat(0, 1), rat(1, 2), rat(-1, 2)]
        .into_iter()
        .find(|a| rational_angle(a).as_ref() == Some(angle))
        .ok_or_else(|| SeriesError::UnsupportedAngle(angle.clone()))?;
    // sin(j·t) = U_{j−1}(a)·sin t
    let sin_t = AlgebraicScalar::sqrt_of(&(Rational::one() - &a * &a)).unwrap();
    let two = BigInt::from(2);
    let period = if angle.numer() % &two == BigInt::zero() {
        angle.denom()
    } else {
        &(angle.denom() * &two)
    };
    let period = usize::try_from(period.clone()).unwrap();
    let values = (1..=period)
        .map(|j| sin_t.scale(&chebyshev_u(j - 1, &a)))
        .collect();
    Ok(SinePeriodProfile { period, values })
}

/// `Σ coeff·ζ(weight, q) − Σ c/n^weight` over the listed corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzCombo {
    pub weight: u32,
    pub terms: Vec<(AlgebraicScalar, Rational)>,
    /// Leading terms `(n, c(n))` subtracted from the full residue-class sum.
    pub corrections: Vec<(u64, AlgebraicScalar)>,
}

impl HurwitzCombo {
    pub fn numeric_value(&self) -> f64 {
        let mut sum = CompensatedSum::new();
        for (c, q) in &self.terms {
            sum.add(c.to_f64() * hurwitz_zeta(self.weight, q).expect("q in (0, 1]"));
        }
        for (n, c) in &self.corrections {
            sum.add(-c.to_f64() / (*n as f64).powi(self.weight as i32));
        }
        sum.value()
    }

    /// Exact value of the subtracted leading terms, `−Σ c(n)/n^w`, grouped by radicand.
    pub fn correction_terms(&self) -> Vec<AlgebraicScalar> {
        self.corrections
            .iter()
            .map(|(n, c)| {
                let denom = BigInt::from(*n).pow(self.weight);
                c.scale(&Rational::new(-BigInt::one(), denom))
            })
            .collect()
    }
}

/// `Σ_{k≥0} sin((k+1)·t) / (k+shift)^weight` as an exact Hurwitz combination.
///
/// `shift = 1` is the plain sum `Σ_{n≥1} sin(n·t)/n^w`; larger shifts rotate the
/// residue classes and subtract the `shift − 1` leading terms.
pub fn periodic_sum(profile: &SinePeriodProfile, weight: u32, shift: u64) -> HurwitzCombo {
    assert!(weight >= 2 && shift >= 1);
    let p = profile.period as i64;
    let s = shift as i64;
    // c(n) = sin((n − shift + 1)·t)
    let coeff = |n: i64| profile.value(n - s + 1).clone();
    let scale = Rational::new(BigInt::one(), BigInt::from(p).pow(weight));
    let terms = (1..=p)
        .filter_map(|j| {
            let c = coeff(j);
            (!c.is_zero()).then(|| (c.scale(&scale), rat(j, p)))
        })
        .collect();
    let corrections = (1..s)
        .filter_map(|n| {
            let c = coeff(n);
            (!c.is_zero()).then_some((n as u64, c))
        })
        .collect();
    HurwitzCombo {
        weight,
        terms,
        corrections,
    }
}
