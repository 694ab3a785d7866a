use std::f64::consts::PI;

use num_traits::ToPrimitive;

use super::zeta::zeta_even;
use crate::numeric::CompensatedSum;
use crate::ratfun::Rational;

/// `Cl₂(θ) = Σ_{k≥1} sin(kθ)/k²`.
///
/// After reduction to `(−π, π]`:
/// `Cl₂(θ) = θ − θ log|θ| + Σ_{n≥1} ζ(2n)/(n(2n+1)) · (θ/2π)^{2n} · θ`.
pub fn clausen2(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let reduced = theta - two_pi * (theta / two_pi).round();
    clausen2_reduced(reduced)
}

/// `Cl₂(π·r)` with the angle reduced exactly modulo `2π`.
pub fn clausen2_pi(r: &Rational) -> f64 {
    let two = Rational::from_integer(2.into());
    let mut red = r - &two * (r / &two).floor();
    if red > Rational::from_integer(1.into()) {
        red -= two;
    }
    clausen2_reduced(PI * red.to_f64().unwrap())
}

fn clausen2_reduced(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let mut sum = CompensatedSum::new();
    sum.add(theta);
    sum.add(-theta * theta.abs().ln());
    let w2 = (theta / (2.0 * PI)).powi(2);
    let mut w_pow = 1.0;
    for n in 1..200usize {
        w_pow *= w2;
        let nf = n as f64;
        let term = zeta_even(n) / (nf * (2.0 * nf + 1.0)) * w_pow * theta;
        sum.add(term);
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum.value()
}

/// Catalan's constant, `Cl₂(π/2)`, computed once.
pub fn catalan() -> f64 {
    static CATALAN: std::sync::OnceLock<f64> = std::sync::OnceLock::new();
    *CATALAN.get_or_init(|| clausen2_pi(&Rational::new(1.into(), 2.into())))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rat;

    #[test]
    fn values() {
        assert_eq!(clausen2(0.0), 0.0);
        assert!((clausen2(PI / 2.0) - 0.915965594177219).abs() < 1e-15);
        assert!((catalan() - 0.915965594177219).abs() < 1e-15);
        assert!((clausen2(2.0 * PI / 3.0) - 0.6766277376064358).abs() < 1e-15);
        assert!((clausen2(PI / 3.0) - 1.0149416064096536).abs() < 1e-15);
        assert!(clausen2(PI).abs() < 1e-15);
    }

    #[test]
    fn catalan_by_alternating_series() {
        // Σ (−1)^k/(2k+1)², summed in pairs from the tail.
        let n = 2_000_000;
        let mut s = 0.0;
        for k in (0..n).rev() {
            let d = (2 * k + 1) as f64;
            s += if k % 2 == 0 { 1.0 } else { -1.0 } / (d * d);
        }
        assert!((catalan() - s).abs() < 1e-12);
    }

    #[test]
    fn odd_and_periodic() {
        for &t in &[0.1, 0.7, 1.3, 2.9, 3.1] {
            assert!((clausen2(-t) + clausen2(t)).abs() < 1e-15);
            assert!((clausen2(t + 2.0 * PI) - clausen2(t)).abs() < 1e-13);
        }
    }

    #[test]
    fn exact_angle_reduction() {
        let a = clausen2_pi(&rat(1, 3));
        assert!((clausen2_pi(&rat(7, 3)) - a).abs() < 1e-16);
        assert!((clausen2_pi(&rat(-5, 3)) - a).abs() < 1e-16);
        assert!((clausen2_pi(&rat(3, 2)) + catalan()).abs() < 1e-15);
        assert_eq!(clausen2_pi(&rat(4, 1)), 0.0);
        assert!(clausen2_pi(&rat(1, 1)).abs() < 1e-15);
    }
}
