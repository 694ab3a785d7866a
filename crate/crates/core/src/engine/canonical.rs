//! Rewriting Hurwitz, Riemann and polylog constants into a canonical basis.
//!
//! Rules used:
//! - `ζ(m, 1) = ζ(m)`, `ζ(m, 1/2) = (2^m − 1) ζ(m)`, `Li_m(−1) = −(1 − 2^{1−m}) ζ(m)`
//! - `ζ(2k)` as a rational multiple of `π^{2k}`
//! - duplication `ζ(m, q) + ζ(m, q + 1/2) = 2^m ζ(m, 2q)`
//! - `ζ(m, 1/3) + ζ(m, 2/3) = (3^m − 1) ζ(m)`
//! - reflection `ζ(m, q) + (−1)^m ζ(m, 1−q) = (−1)^{m−1} π^m cot^{(m−1)}(πq)/(m−1)!`
//!
//! After rewriting, the only Hurwitz values left are `ζ(m, 1/3)` and `ζ(m, 1/4)`
//! at even `m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, ConstantSymbol, SymbolicValue};
use crate::numeric::bernoulli;
use crate::ratfun::{rat, Polynomial, Rational};
use crate::series::AlgebraicScalar;

type Terms = Vec<(AlgebraicScalar, ConstantSymbol)>;

/// Applies the rewrite rules until no rule fires. Idempotent and value preserving.
pub fn canonicalize(v: &SymbolicValue) -> SymbolicValue {
    let mut out = SymbolicValue::zero();
    for (c, s) in v.terms() {
        for (k, sym) in reduce(s) {
            out.add_term(&c.checked_mul(&k).expect("radicand fits in u64"), sym);
        }
    }
    out
}

fn pow_int(base: i64, exp: u32) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp))
}

fn scalar(q: Rational) -> AlgebraicScalar {
    AlgebraicScalar::rational(q)
}

fn single(sym: ConstantSymbol) -> Terms {
    vec![(AlgebraicScalar::one(), sym)]
}

/// `c·(terms)` appended to `out`.
fn push_scaled(out: &mut Terms, c: &AlgebraicScalar, terms: Terms) {
    for (k, s) in terms {
        out.push((k.checked_mul(c).expect("radicand fits in u64"), s));
    }
}

/// `ζ(m, q)` in canonical terms.
fn reduce_hurwitz(m: u32, q: &Rational) -> Terms {
    let two_m = pow_int(2, m);
    let even = m % 2 == 0;
    let mut out = Terms::new();
    let hz = |out: &mut Terms, c: Rational, q: Rational| {
        push_scaled(out, &scalar(c), reduce(&ConstantSymbol::hurwitz(m, q)));
    };
    let reflect = |q: &Rational| {
        let rho = reflection_constant(m, q).unwrap();
        (rho, ConstantSymbol::PiPow(m))
    };
    if q.is_one() {
        return reduce(&ConstantSymbol::Zeta(m));
    }
    if *q == rat(1, 2) {
        push_scaled(&mut out, &scalar(two_m - Rational::one()), reduce(&ConstantSymbol::Zeta(m)));
        return out;
    }
    if *q == rat(1, 6) {
        // ζ(1/6) + ζ(2/3) = 2^m ζ(1/3)
        hz(&mut out, two_m, rat(1, 3));
        hz(&mut out, -Rational::one(), rat(2, 3));
        return out;
    }
    if *q == rat(5, 6) {
        // ζ(1/3) + ζ(5/6) = 2^m ζ(2/3)
        hz(&mut out, two_m, rat(2, 3));
        hz(&mut out, -Rational::one(), rat(1, 3));
        return out;
    }
    // Pairs {q, 1−q} with a known sum: (q, sum coefficient of ζ(m)).
    let pair = if *q == rat(1, 3) || *q == rat(2, 3) {
        Some((rat(1, 3), pow_int(3, m) - Rational::one()))
    } else if *q == rat(1, 4) || *q == rat(3, 4) {
        Some((rat(1, 4), &two_m * (&two_m - Rational::one())))
    } else {
        None
    };
    let Some((low, sum_coeff)) = pair else {
        return single(ConstantSymbol::HurwitzZeta(m, q.clone()));
    };
    let (rho, pi) = reflect(&low);
    let is_low = *q == low;
    if even {
        // ζ(low) + ζ(1 − low) = ρ π^m; keep ζ(low).
        if is_low {
            return single(ConstantSymbol::HurwitzZeta(m, q.clone()));
        }
        out.push((rho, pi));
        out.push((scalar(-Rational::one()), ConstantSymbol::HurwitzZeta(m, low)));
        return out;
    }
    // Odd m: ζ(low) − ζ(1 − low) = ρ π^m and ζ(low) + ζ(1 − low) = S ζ(m).
    let half = rat(1, 2);
    let sign = if is_low { half.clone() } else { -half.clone() };
    out.push((rho.scale(&sign), pi));
    push_scaled(&mut out, &scalar(sum_coeff * half), reduce(&ConstantSymbol::Zeta(m)));
    out
}

/// Canonical expansion of one symbol.
fn reduce(s: &ConstantSymbol) -> Terms {
    match s {
        ConstantSymbol::Zeta(m) if m % 2 == 0 => {
            // ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)
            let k = m / 2;
            let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
            let c = sign * bernoulli(*m as usize) * pow_int(2, *m)
                / (Rational::from_integer(factorial(*m)) * rat(2, 1));
            vec![(scalar(c), ConstantSymbol::PiPow(*m))]
        }
        ConstantSymbol::HurwitzZeta(m, q) => reduce_hurwitz(*m, q),
        ConstantSymbol::PolyLogRational(m, x) if *x == rat(-1, 1) => {
            let c = -(Rational::one() - pow_int(2, *m).recip() * rat(2, 1));
            let mut out = Terms::new();
            push_scaled(&mut out, &scalar(c), reduce(&ConstantSymbol::Zeta(*m)));
            out
        }
        _ => single(s.clone()),
    }
}

/// `P_n` with `d^n/dy^n cot y = P_n(cot y)`: `P_0 = c`, `P_{n+1} = −(1 + c²) P_n′`.
pub fn cot_derivative_poly(n: u32) -> Polynomial {
    let minus_one_plus_c2 = Polynomial::from_i64s(&[-1, 0, -1]);
    let mut p = Polynomial::x();
    for _ in 0..n {
        p = &minus_one_plus_c2 * &p.derivative();
    }
    p
}

/// `cot(πq)` as `q'·√d` for the arguments with algebraic cotangent of degree ≤ 2.
fn cot_pi(q: &Rational) -> Option<AlgebraicScalar> {
    let table = [
        (rat(1, 6), AlgebraicScalar::new(rat(1, 1), 3)),
        (rat(1, 4), AlgebraicScalar::one()),
        (rat(1, 3), AlgebraicScalar::new(rat(1, 3), 3)),
        (rat(1, 2), AlgebraicScalar::zero()),
        (rat(2, 3), AlgebraicScalar::new(rat(-1, 3), 3)),
        (rat(3, 4), AlgebraicScalar::rational(rat(-1, 1))),
        (rat(5, 6), AlgebraicScalar::new(rat(-1, 1), 3)),
    ];
    table.into_iter().find(|(k, _)| k == q).map(|(_, v)| v)
}

/// Evaluates a polynomial of pure parity at `c = q√d`, exactly.
fn eval_at_scalar(p: &Polynomial, c: &AlgebraicScalar) -> AlgebraicScalar {
    let d = Rational::from_integer(BigInt::from(c.d()));
    let (mut even, mut odd) = (Rational::zero(), Rational::zero());
    // c^k = q^k · d^{⌊k/2⌋} · √d^{k mod 2}
    let mut qk = Rational::one();
    let mut dk = Rational::one();
    for (k, coeff) in p.coeffs().iter().enumerate() {
        if k > 0 {
            qk *= c.q();
            if k % 2 == 0 {
                dk *= &d;
            }
        }
        let term = coeff * &qk * &dk;
        if k % 2 == 0 {
            even += term;
        } else {
            odd += term;
        }
    }
    if c.d() == 1 {
        return AlgebraicScalar::rational(even + odd);
    }
    assert!(even.is_zero() || odd.is_zero(), "cot polynomials have pure parity");
    if odd.is_zero() {
        AlgebraicScalar::rational(even)
    } else {
        AlgebraicScalar::new(odd, c.d())
    }
}

/// `ρ` with `ζ(m, q) + (−1)^m ζ(m, 1−q) = ρ·π^m`, for `q` with tabulated `cot(πq)`.
pub fn reflection_constant(m: u32, q: &Rational) -> Option<AlgebraicScalar> {
    assert!(m >= 2);
    let c = cot_pi(q)?;
    let value = eval_at_scalar(&cot_derivative_poly(m - 1), &c);
    let sign = if m % 2 == 1 { Rational::one() } else { -Rational::one() };
    Some(value.scale(&(sign / Rational::from_integer(factorial(m - 1)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hurwitz_zeta;
    use std::f64::consts::PI;

    #[test]
    fn cot_polynomials() {
        assert_eq!(cot_derivative_poly(1), Polynomial::from_i64s(&[-1, 0, -1]));
        assert_eq!(cot_derivative_poly(2), Polynomial::from_i64s(&[0, 2, 0, 2]));
    }

    #[test]
    fn cot_derivatives_match_finite_differences() {
        let cot = |y: f64| y.cos() / y.sin();
        let h = 1e-3;
        for q in [1.0 / 6.0, 0.25, 1.0 / 3.0, 0.4] {
            let y = PI * q;
            let c = cot(y);
            let fd1 = (cot(y + h) - cot(y - h)) / (2.0 * h);
            let fd2 = (cot(y + h) - 2.0 * c + cot(y - h)) / (h * h);
            let fd3 = (cot(y + 2.0 * h) - 2.0 * cot(y + h) + 2.0 * cot(y - h) - cot(y - 2.0 * h))
                / (2.0 * h * h * h);
            for (n, fd, tol) in [(1, fd1, 1e-5), (2, fd2, 1e-4), (3, fd3, 1e-3)] {
                let exact = cot_derivative_poly(n).eval_f64(c);
                assert!((exact - fd).abs() < tol * exact.abs().max(1.0), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn reflection_constants() {
        // weight 2: π²/sin²(πq)
        assert_eq!(reflection_constant(2, &rat(1, 3)).unwrap(), AlgebraicScalar::rational(rat(4, 3)));
        assert_eq!(reflection_constant(2, &rat(1, 4)).unwrap(), AlgebraicScalar::rational(rat(2, 1)));
        // weight 3: π³ cos/sin³ at 1/3 = (1/2)/(3√3/8) = 4/(3√3)
        assert_eq!(reflection_constant(3, &rat(1, 3)).unwrap(), AlgebraicScalar::new(rat(4, 9), 3));
        assert!(reflection_constant(2, &rat(1, 5)).is_none());
    }

    #[test]
    fn reflection_identity_numeric() {
        for m in 2..=9u32 {
            for (n, d) in [(1, 6), (1, 4), (1, 3)] {
                let q = rat(n, d);
                let lhs = hurwitz_zeta(m, &q).unwrap()
                    + if m % 2 == 0 { 1.0 } else { -1.0 } * hurwitz_zeta(m, &(Rational::one() - &q)).unwrap();
                let rhs = reflection_constant(m, &q).unwrap().to_f64() * PI.powi(m as i32);
                assert!((lhs - rhs).abs() < 1e-12 * rhs.abs(), "m={m} q={q}");
            }
        }
    }

    #[test]
    fn reduces_to_basis_and_preserves_value() {
        for m in 2..=8u32 {
            for (n, d) in [(1, 6), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (5, 6), (1, 1)] {
                let sym = ConstantSymbol::hurwitz(m, rat(n, d));
                let v = SymbolicValue::term(AlgebraicScalar::one(), sym.clone());
                let c = canonicalize(&v);
                let (a, b) = (c.numeric_value(), sym.numeric_value());
                // Rewriting ζ(m, 5/6) into the ζ(m, 1/3) basis cancels large terms.
                let magnitude: f64 = c.terms().map(|(k, s)| (k.to_f64() * s.numeric_value()).abs()).sum();
                assert!((a - b).abs() < 1e-15 * magnitude.max(b), "m={m} q={n}/{d}: {a} vs {b}");
                for s in c.symbols() {
                    match s {
                        ConstantSymbol::HurwitzZeta(w, q) => {
                            assert!(w % 2 == 0 && (*q == rat(1, 3) || *q == rat(1, 4)))
                        }
                        ConstantSymbol::Zeta(w) => assert!(w % 2 == 1),
                        ConstantSymbol::PiPow(_) => {}
                        other => panic!("unexpected {other:?}"),
                    }
                }
                assert_eq!(canonicalize(&c), c);
            }
        }
    }

    #[test]
    fn spec_examples() {
        // −(1/36)(ζ(2,1/6) + ζ(2,1/3) − ζ(2,2/3) − ζ(2,5/6))
        let mut v = SymbolicValue::zero();
        let c = rat(-1, 36);
        for (q, s) in [(rat(1, 6), 1), (rat(1, 3), 1), (rat(2, 3), -1), (rat(5, 6), -1)] {
            v.add_term(&AlgebraicScalar::rational(&c * rat(s, 1)), ConstantSymbol::HurwitzZeta(2, q));
        }
        let out = canonicalize(&v);
        assert_eq!(out.to_string(), "2*pi^2/9 - (1/3)*psi'(1/3)");
        assert!((out.numeric_value() - v.numeric_value()).abs() < 1e-13);

        let z = SymbolicValue::term(AlgebraicScalar::one(), ConstantSymbol::HurwitzZeta(3, rat(1, 1)));
        assert_eq!(canonicalize(&z).to_string(), "zeta(3)");

        let li = SymbolicValue::term(AlgebraicScalar::one(), ConstantSymbol::PolyLogRational(2, rat(-1, 1)));
        assert_eq!(canonicalize(&li).to_string(), "-pi^2/12");

        let mut w3 = SymbolicValue::zero();
        w3.add_term(&AlgebraicScalar::one(), ConstantSymbol::HurwitzZeta(3, rat(1, 6)));
        w3.add_term(&AlgebraicScalar::one(), ConstantSymbol::HurwitzZeta(3, rat(2, 3)));
        let out = canonicalize(&w3);
        assert!(out.symbols().all(|s| !s.is_psi()));
        assert!((out.numeric_value() - w3.numeric_value()).abs() < 1e-12 * w3.numeric_value());
    }
}
