use std::f64::consts::PI;

use num_complex::Complex64;

use super::zeta::{zeta, zeta_even};
use super::SpecFunError;
use crate::numeric::ComplexCompensatedSum;

/// Below this modulus the defining series converges geometrically fast enough.
const SERIES_RADIUS: f64 = 0.5;
const DOMAIN_SLACK: f64 = 1e-12;

/// `Li₂(z)` on the closed unit disk.
pub fn dilog(z: Complex64) -> Result<Complex64, SpecFunError> {
    polylog(2, z)
}

/// `Li_s(z) = Σ_{k≥1} z^k / k^s` for integer `s ≥ 1` and `|z| ≤ 1`.
///
/// Small arguments use the defining series. Elsewhere the expansion in
/// `μ = log z` about `z = 1`,
///
/// ```text
/// Li_s(e^μ) = Σ_{k≠s−1} ζ(s−k) μ^k/k! + μ^{s−1}/(s−1)! · (H_{s−1} − log(−μ)),
/// ```
///
/// converges for `|μ| < 2π`, which covers `1/2 < |z| ≤ 1` with ratio at most ~0.52.
/// On the unit circle its imaginary part is the Clausen-type series in `θ`.
pub fn polylog(s: u32, z: Complex64) -> Result<Complex64, SpecFunError> {
    if s == 0 {
        return Err(SpecFunError::Domain("polylog weight must be >= 1".into()));
    }
    if !z.re.is_finite() || !z.im.is_finite() || z.norm() > 1.0 + DOMAIN_SLACK {
        return Err(SpecFunError::Domain(format!(
            "polylog argument {z} outside the closed unit disk"
        )));
    }
    if s == 1 {
        if z == Complex64::new(1.0, 0.0) {
            return Err(SpecFunError::Pole);
        }
        return Ok(-(Complex64::new(1.0, 0.0) - z).ln());
    }
    if z.norm() <= SERIES_RADIUS {
        return Ok(direct_series(s, z));
    }
    Ok(log_series(s, z))
}

fn direct_series(s: u32, z: Complex64) -> Complex64 {
    let sf = f64::from(s);
    let mut sum = ComplexCompensatedSum::default();
    let mut power = z;
    for k in 1..200 {
        let term = power / (k as f64).powf(sf);
        sum.add(term);
        if term.norm() < 1e-18 * sum.value().norm() || power.norm() == 0.0 {
            break;
        }
        power *= z;
    }
    sum.value()
}

fn log_series(s: u32, z: Complex64) -> Complex64 {
    let mu = z.ln();
    if mu.norm() == 0.0 {
        return Complex64::new(zeta(s), 0.0);
    }
    let mut sum = ComplexCompensatedSum::default();

    // k = 0 … s−2: ζ(s−k) μ^k / k!
    let mut mu_pow = Complex64::new(1.0, 0.0);
    let mut fact = 1.0;
    for k in 0..s - 1 {
        if k > 0 {
            mu_pow *= mu;
            fact *= f64::from(k);
        }
        sum.add(mu_pow * (zeta(s - k) / fact));
    }

    // k = s−1: μ^{s−1}/(s−1)! · (H_{s−1} − log(−μ))
    if s > 1 {
        mu_pow *= mu;
        fact *= f64::from(s - 1);
    }
    let harmonic: f64 = (1..s).map(|j| 1.0 / f64::from(j)).sum();
    sum.add(mu_pow / fact * (Complex64::new(harmonic, 0.0) - (-mu).ln()));

    // k = s: ζ(0) = −1/2
    let mu_s1 = mu_pow;
    sum.add(-0.5 * mu_pow * mu / (fact * f64::from(s)));

    // k = s−1+2j: ζ(1−2j) = (−1)^j 2 (2j−1)! ζ(2j) / (2π)^{2j}
    let w = mu / (2.0 * PI);
    let w2 = w * w;
    let mut w_pow = Complex64::new(1.0, 0.0);
    for j in 1..400usize {
        w_pow *= w2;
        // (2j−1)! / (s−1+2j)!
        let mut ratio = 1.0;
        for i in 2 * j..=(2 * j + s as usize - 1) {
            ratio /= i as f64;
        }
        let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
        let term = mu_s1 * w_pow * (sign * 2.0 * zeta_even(j) * ratio);
        sum.add(term);
        if term.norm() < 1e-18 * sum.value().norm().max(1e-300) {
            break;
        }
    }
    sum.value()
}
