use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::{One, Signed, ToPrimitive};

use super::SpecFunError;
use crate::numeric::{bernoulli_f64, CompensatedSum};
use crate::ratfun::Rational;

/// Explicit terms before the Euler–Maclaurin tail.
const EM_TERMS: usize = 30;
/// Bernoulli corrections B₂ … B₁₄.
const EM_CORRECTIONS: usize = 7;

/// `ζ(s, q) = Σ_{k≥0} (k+q)^{-s}` for integer `s ≥ 2` and rational `0 < q ≤ 1`.
pub fn hurwitz_zeta(s: u32, q: &Rational) -> Result<f64, SpecFunError> {
    if s < 2 || !q.is_positive() || *q > Rational::one() {
        return Err(SpecFunError::Domain(format!(
            "hurwitz_zeta needs s >= 2 and 0 < q <= 1, got s = {s}, q = {q}"
        )));
    }
    Ok(hurwitz_zeta_f64(s, q.to_f64().unwrap()))
}

/// Euler–Maclaurin evaluation of `ζ(s, q)` for real `q > 0`.
///
/// The explicit head is doubled until the first omitted correction is below
/// one ulp of the result.
pub fn hurwitz_zeta_f64(s: u32, q: f64) -> f64 {
    debug_assert!(s >= 2 && q > 0.0);
    let mut n = EM_TERMS;
    loop {
        let (value, err) = euler_maclaurin(s, q, n);
        if err <= 1e-16 * value.abs() || n >= 1 << 14 {
            debug_assert!(err <= 1e-15 * value.abs());
            return value;
        }
        n *= 2;
    }
}

fn euler_maclaurin(s: u32, q: f64, n: usize) -> (f64, f64) {
    let sf = f64::from(s);
    let mut sum = CompensatedSum::new();
    for k in (0..n).rev() {
        sum.add((k as f64 + q).powf(-sf));
    }
    let a = n as f64 + q;
    let a_pow = a.powf(-sf);
    sum.add(a * a_pow / (sf - 1.0));
    sum.add(0.5 * a_pow);

    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · a^{−s−2j+1}
    let mut rising = sf; // s(s+1)…(s+2j−2)
    let mut fact = 2.0; // (2j)!
    let mut power = a_pow / a; // a^{−s−2j+1}
    let mut last = 0.0;
    for j in 1..=EM_CORRECTIONS + 1 {
        let term = bernoulli_f64(2 * j) / fact * rising * power;
        if j <= EM_CORRECTIONS {
            sum.add(term);
        } else {
            last = term.abs();
        }
        let j2 = 2.0 * j as f64;
        rising *= (sf + j2 - 1.0) * (sf + j2);
        fact *= (j2 + 1.0) * (j2 + 2.0);
        power /= a * a;
    }
    (sum.value(), last)
}

/// `ψ^{(m)}(q) = (−1)^{m+1} m! ζ(m+1, q)`.
pub fn polygamma(m: u32, q: &Rational) -> Result<f64, SpecFunError> {
    if m < 1 {
        return Err(SpecFunError::Domain(format!("polygamma order must be >= 1, got {m}")));
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let fact: f64 = (1..=m).map(f64::from).product();
    Ok(sign * fact * hurwitz_zeta(m + 1, q)?)
}

/// Riemann `ζ(m)` for integer `m ≥ 2`.
pub fn zeta(m: u32) -> f64 {
    assert!(m >= 2, "zeta({m}) outside m >= 2");
    match m {
        2 => PI * PI / 6.0,
        4 => PI.powi(4) / 90.0,
        6 => PI.powi(6) / 945.0,
        _ => hurwitz_zeta_f64(m, 1.0),
    }
}

/// `ζ(2j)` for `j = 1, 2, …`, tabulated once.
pub(crate) fn zeta_even(j: usize) -> f64 {
    const LEN: usize = 200;
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..LEN)
            .map(|j| if j == 0 { -0.5 } else { zeta(2 * j as u32) })
            .collect()
    });
    if j < LEN {
        table[j]
    } else {
        1.0
    }
}

/// Direct partial sum plus the integral tail estimate; used as an
/// independent check of the Euler–Maclaurin path.
pub fn hurwitz_zeta_direct(s: u32, q: f64, terms: usize) -> f64 {
    let sf = f64::from(s);
    let mut sum: CompensatedSum = (0..terms).rev().map(|k| (k as f64 + q).powf(-sf)).collect();
    let a = terms as f64 + q;
    sum.add(a.powf(1.0 - sf) / (sf - 1.0) + 0.5 * a.powf(-sf));
    sum.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rat;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn hurwitz_examples() {
        assert!(close(hurwitz_zeta(2, &rat(1, 1)).unwrap(), 1.6449340668482264, 1e-14));
        assert!(close(hurwitz_zeta(2, &rat(1, 2)).unwrap(), PI * PI / 2.0, 1e-14));
        // ψ′(1/3), mpmath at 30 digits.
        assert!(close(hurwitz_zeta(2, &rat(1, 3)).unwrap(), 10.095597125427094, 1e-14));
        assert!(close(hurwitz_zeta(3, &rat(1, 3)).unwrap(), 27.561061199700804, 1e-14));
    }

    #[test]
    fn hurwitz_domain() {
        assert!(hurwitz_zeta(1, &rat(1, 2)).is_err());
        assert!(hurwitz_zeta(2, &rat(0, 1)).is_err());
        assert!(hurwitz_zeta(2, &rat(3, 2)).is_err());
        assert!(polygamma(0, &rat(1, 2)).is_err());
    }

    #[test]
    fn polygamma_examples() {
        let p13 = polygamma(1, &rat(1, 3)).unwrap();
        assert!(close(p13, 10.095597125427094, 1e-14));
        let p16 = polygamma(1, &rat(1, 6)).unwrap();
        assert!((p16 - (5.0 * p13 - 4.0 * PI * PI / 3.0)).abs() < 1e-10);
        assert!(close(polygamma(1, &rat(1, 2)).unwrap(), PI * PI / 2.0, 1e-14));
        // ψ″(q) = −2ζ(3, q)
        assert!(close(
            polygamma(2, &rat(1, 3)).unwrap(),
            -2.0 * 27.561061199700804,
            1e-14
        ));
    }

    #[test]
    fn zeta_examples() {
        assert!(close(zeta(2), 1.6449340668482264, 1e-15));
        assert!(close(zeta(3), 1.2020569031595943, 1e-14));
        assert!(close(zeta(5), 1.0369277551433699, 1e-14));
        assert!(close(zeta(7), 1.0083492773819228, 1e-14));
        // ζ(3) by an accelerated series: ζ(3) = (5/2) Σ (−1)^{k+1} / (k³ C(2k,k)).
        let mut acc = 0.0;
        let mut binom = 1.0;
        for k in 1..40 {
            let kf = k as f64;
            binom *= (2.0 * kf - 1.0) * 2.0 / kf;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign / (kf.powi(3) * binom);
        }
        assert!(close(zeta(3), 2.5 * acc, 1e-14));
    }

    #[test]
    fn euler_maclaurin_matches_direct_sum() {
        for s in [2, 3, 4] {
            for (n, d) in [(1, 6), (1, 3), (1, 2), (2, 3), (5, 6), (1, 1)] {
                let q = rat(n, d);
                let em = hurwitz_zeta(s, &q).unwrap();
                let direct = hurwitz_zeta_direct(s, n as f64 / d as f64, 200_000);
                assert!(close(em, direct, 1e-12), "s={s} q={n}/{d}: {em} vs {direct}");
            }
        }
    }

    #[test]
    fn even_zeta_table() {
        assert!(close(zeta_even(1), PI * PI / 6.0, 1e-15));
        assert!(close(zeta_even(10), 1.0000009539620338, 1e-15));
    }
}
