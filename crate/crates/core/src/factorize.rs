//! Denominator factorization into `x + r` and `x² − 2a·x + 1` factors, and
//! exact partial fraction decomposition over those factors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::ratfun::{rat, Polynomial, Rational, RationalFunction};

/// Integers above this bound are not trial-factored; their polynomials stay in the residual.
const MAX_FACTORED: u64 = 1_000_000_000_000;

/// The monic factor `x + r`, root `−r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub r: Rational,
    pub multiplicity: u32,
}

impl LinearFactor {
    pub fn root(&self) -> Rational {
        -self.r.clone()
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.r)
    }
}

/// The factor `x² − 2a·x + 1` with `|a| < 1`; roots `e^{±it}`, `a = cos t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactor {
    pub a: Rational,
    pub multiplicity: u32,
    /// `t/π` when it is rational, which happens exactly for `a ∈ {0, ±1/2}`.
    pub angle: Option<Rational>,
}

impl QuadraticFactor {
    pub fn new(a: Rational, multiplicity: u32) -> Self {
        let angle = rational_angle(&a);
        Self {
            a,
            multiplicity,
            angle,
        }
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::unit_circle_quadratic(&self.a)
    }
}

/// `t/π` for `cos t = a`, when rational (Niven: only `a ∈ {0, ±1/2}` inside `(−1, 1)`).
pub fn rational_angle(a: &Rational) -> Option<Rational> {
    if a.is_zero() {
        Some(rat(1, 2))
    } else if *a == rat(1, 2) {
        Some(rat(1, 3))
    } else if *a == rat(-1, 2) {
        Some(rat(2, 3))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorFactorization {
    pub constant: Rational,
    pub linears: Vec<LinearFactor>,
    pub quadratics: Vec<QuadraticFactor>,
    /// Monic remainder outside the admissible family, or 1.
    pub residual: Polynomial,
}

impl DenominatorFactorization {
    /// `constant · Π linears^m · Π quadratics^m · residual`.
    pub fn expand(&self) -> Polynomial {
        let mut acc = &Polynomial::constant(self.constant.clone()) * &self.residual;
        for l in &self.linears {
            acc = &acc * &l.polynomial().pow(l.multiplicity);
        }
        for q in &self.quadratics {
            acc = &acc * &q.polynomial().pow(q.multiplicity);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearTerm {
    /// Numerator `A` of `A / (x + r)`.
    pub numer: Rational,
    pub factor: LinearFactor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTerm {
    /// `B` in `(B·x + C) / (x² − 2a·x + 1)`.
    pub b: Rational,
    /// `C` in `(B·x + C) / (x² − 2a·x + 1)`.
    pub c: Rational,
    pub factor: QuadraticFactor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionForm {
    pub polynomial_part: Polynomial,
    pub linear_terms: Vec<LinearTerm>,
    pub quadratic_terms: Vec<QuadraticTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizeError {
    #[error("repeated denominator factor {factor} (multiplicity {multiplicity})")]
    UnsupportedMultiplicity { factor: String, multiplicity: u32 },
    #[error("denominator factor {residual} is not a product of x + r and x^2 - 2a*x + 1")]
    UnsupportedFactor { residual: Polynomial },
    #[error("{}", pole_message(root))]
    PoleInUnitInterval { root: Option<Rational> },
}

fn pole_message(root: &Option<Rational>) -> String {
    match root {
        Some(r) if r.is_integer() => format!("pole at x = {} inside closed interval", r.numer()),
        Some(r) => format!("pole at x = {}/{} inside closed interval", r.numer(), r.denom()),
        None => "pole inside closed interval [0, 1]".to_string(),
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

impl fmt::Display for QuadraticFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

/// Splits a non-zero polynomial into rational-root linear factors, unit-circle
/// quadratics with rational `a`, and a residual.
pub fn factor_denominator(den: &Polynomial) -> DenominatorFactorization {
    let constant = den
        .leading()
        .cloned()
        .expect("factor_denominator on the zero polynomial");
    let mut work = den.monic();
    let mut linears = Vec::new();
    let mut quadratics = Vec::new();

    let x = Polynomial::x();
    let mut zero_mult = 0;
    while work.degree().unwrap_or(0) > 0 && work.coeff(0).is_zero() {
        work = work.exact_div(&x).unwrap();
        zero_mult += 1;
    }
    if zero_mult > 0 {
        linears.push(LinearFactor {
            r: Rational::zero(),
            multiplicity: zero_mult,
        });
    }

    if work.degree().unwrap_or(0) > 0 {
        for root in rational_root_candidates(&work) {
            let factor = Polynomial::linear(&-root.clone());
            let mut mult = 0;
            while let Some(q) = work.exact_div(&factor) {
                work = q;
                mult += 1;
            }
            if mult > 0 {
                linears.push(LinearFactor {
                    r: -root,
                    multiplicity: mult,
                });
            }
        }
    }

    if work.degree().unwrap_or(0) >= 2 {
        for a in quadratic_candidates(&work) {
            let factor = Polynomial::unit_circle_quadratic(&a);
            let mut mult = 0;
            while let Some(q) = work.exact_div(&factor) {
                work = q;
                mult += 1;
            }
            if mult > 0 {
                quadratics.push(QuadraticFactor::new(a, mult));
            }
        }
    }

    linears.sort_by(|a, b| a.r.cmp(&b.r));
    quadratics.sort_by(|a, b| a.a.cmp(&b.a));
    DenominatorFactorization {
        constant,
        linears,
        quadratics,
        residual: work,
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&n| n > 0 && n <= MAX_FACTORED)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Candidates `±p/q` with `p | a₀`, `q | aₙ` of the primitive integer form.
fn rational_root_candidates(p: &Polynomial) -> Vec<Rational> {
    let ints = p.primitive_integer_form();
    let (Some(ps), Some(qs)) = (
        small_divisors(&ints[0]),
        small_divisors(ints.last().unwrap()),
    ) else {
        return Vec::new();
    };
    let mut out: Vec<Rational> = Vec::new();
    for &num in &ps {
        for &den in &qs {
            for sign in [1i64, -1] {
                let c = Rational::new(BigInt::from(num) * sign, BigInt::from(den));
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Values `a = u/(2v)` with `|a| < 1` for which `v·x² − u·x + v` could be a
/// primitive factor of `p` (Gauss's lemma: `v` divides both end coefficients).
fn quadratic_candidates(p: &Polynomial) -> Vec<Rational> {
    let ints = p.primitive_integer_form();
    let g = ints[0].gcd(ints.last().unwrap());
    let Some(vs) = small_divisors(&g) else {
        return Vec::new();
    };
    let at_one: BigInt = ints.iter().sum();
    let at_minus_one: BigInt = ints
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();
    let mut out = Vec::new();
    for v in vs {
        let v = v as i64;
        for u in (1 - 2 * v)..(2 * v) {
            if u.gcd(&v) != 1 {
                continue;
            }
            // The factor's values at ±1 must divide the polynomial's values there.
            if !(at_one.clone() % (2 * v - u)).is_zero()
                || !(at_minus_one.clone() % (2 * v + u)).is_zero()
            {
                continue;
            }
            out.push(rat(u, 2 * v));
        }
    }
    out
}

/// Exact decomposition into polynomial part, `A/(x + r)` and `(Bx + C)/(x² − 2ax + 1)` terms.
pub fn partial_fractions(f: &RationalFunction) -> Result<PartialFractionForm, FactorizeError> {
    let g = f.normalize();
    let num = g.scaled_numerator();
    let den = g.denominator().clone();
    let fac = factor_denominator(&den);

    for l in &fac.linears {
        let root = l.root();
        if !root.is_negative() && root <= Rational::one() {
            return Err(FactorizeError::PoleInUnitInterval { root: Some(root) });
        }
    }
    if fac
        .residual
        .count_real_roots_in(&Rational::zero(), &Rational::one())
        > 0
    {
        return Err(FactorizeError::PoleInUnitInterval { root: None });
    }
    if !fac.residual.is_one() {
        return Err(FactorizeError::UnsupportedFactor {
            residual: fac.residual,
        });
    }
    if let Some(l) = fac.linears.iter().find(|l| l.multiplicity > 1) {
        return Err(FactorizeError::UnsupportedMultiplicity {
            factor: l.to_string(),
            multiplicity: l.multiplicity,
        });
    }
    if let Some(q) = fac.quadratics.iter().find(|q| q.multiplicity > 1) {
        return Err(FactorizeError::UnsupportedMultiplicity {
            factor: q.to_string(),
            multiplicity: q.multiplicity,
        });
    }

    let (polynomial_part, rem) = num.div_rem(&den);
    // N_i ≡ rem · (den / F_i)^{-1}  (mod F_i)
    let term_numerator = |factor: &Polynomial| -> Polynomial {
        let cofactor = den.exact_div(factor).unwrap();
        let (_, inv, _) = Polynomial::ext_gcd(&cofactor.rem(factor), factor);
        (&rem * &inv).rem(factor)
    };

    let linear_terms = fac
        .linears
        .into_iter()
        .map(|factor| LinearTerm {
            numer: term_numerator(&factor.polynomial()).coeff(0),
            factor,
        })
        .filter(|t| !t.numer.is_zero())
        .collect();
    let quadratic_terms = fac
        .quadratics
        .into_iter()
        .map(|factor| {
            let n = term_numerator(&factor.polynomial());
            QuadraticTerm {
                b: n.coeff(1),
                c: n.coeff(0),
                factor,
            }
        })
        .filter(|t| !(t.b.is_zero() && t.c.is_zero()))
        .collect();

    Ok(PartialFractionForm {
        polynomial_part,
        linear_terms,
        quadratic_terms,
    })
}

/// Sums a partial fraction form back into a normalized rational function.
pub fn recombine(p: &PartialFractionForm) -> RationalFunction {
    let mut acc = RationalFunction::from_polynomial(p.polynomial_part.clone());
    for t in &p.linear_terms {
        let term = RationalFunction::normalized(
            Polynomial::constant(t.numer.clone()),
            t.factor.polynomial(),
        )
        .unwrap();
        acc = acc.add(&term);
    }
    for t in &p.quadratic_terms {
        let term = RationalFunction::normalized(
            Polynomial::from_coeffs(vec![t.c.clone(), t.b.clone()]),
            t.factor.polynomial(),
        )
        .unwrap();
        acc = acc.add(&term);
    }
    acc
}

impl PartialFractionForm {
    pub fn is_empty(&self) -> bool {
        self.polynomial_part.is_zero() && self.linear_terms.is_empty() && self.quadratic_terms.is_empty()
    }
}

impl Default for PartialFractionForm {
    fn default() -> Self {
        Self {
            polynomial_part: Polynomial::zero(),
            linear_terms: Vec::new(),
            quadratic_terms: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::parse_expression;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn sixth_cyclotomic_product() {
        let fac = factor_denominator(&p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(
            fac.linears,
            vec![LinearFactor {
                r: Rational::one(),
                multiplicity: 1
            }]
        );
        assert_eq!(
            fac.quadratics,
            vec![
                QuadraticFactor::new(rat(-1, 2), 1),
                QuadraticFactor::new(rat(1, 2), 1)
            ]
        );
        assert!(fac.residual.is_one());
        assert_eq!(fac.quadratics[0].angle, Some(rat(2, 3)));
        assert_eq!(fac.quadratics[1].angle, Some(rat(1, 3)));
    }

    #[test]
    fn x_squared_plus_one() {
        let fac = factor_denominator(&p(&[1, 0, 1]));
        assert_eq!(fac.quadratics, vec![QuadraticFactor::new(Rational::zero(), 1)]);
        assert_eq!(fac.quadratics[0].angle, Some(rat(1, 2)));
    }

    #[test]
    fn x4_plus_1_is_residual() {
        let fac = factor_denominator(&p(&[1, 0, 0, 0, 1]));
        assert!(fac.linears.is_empty() && fac.quadratics.is_empty());
        assert_eq!(fac.residual, p(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn non_monic_quadratic_and_multiplicity() {
        // 25(x² − (6/5)x + 1)² (x + 2)³ x
        let q = p(&[5, -6, 5]);
        let den = &(&(&q * &q) * &p(&[2, 1]).pow(3)) * &p(&[0, 1]);
        let fac = factor_denominator(&den);
        assert_eq!(fac.quadratics, vec![QuadraticFactor::new(rat(3, 5), 2)]);
        assert_eq!(fac.linears.len(), 2);
        assert_eq!(fac.linears[0].multiplicity, 1);
        assert_eq!(fac.linears[1].multiplicity, 3);
        assert_eq!(fac.expand(), den);
    }

    #[test]
    fn paper_decomposition() {
        let f = parse_expression("(1-x)/(1-x^6)").unwrap();
        let pf = partial_fractions(&f).unwrap();
        assert!(pf.polynomial_part.is_zero());
        assert_eq!(pf.linear_terms.len(), 1);
        assert_eq!(pf.linear_terms[0].numer, rat(1, 3));
        let by_a = |a: Rational| pf.quadratic_terms.iter().find(|t| t.factor.a == a).unwrap();
        let minus = by_a(rat(1, 2));
        assert_eq!((minus.b.clone(), minus.c.clone()), (rat(-1, 3), rat(1, 6)));
        let plus = by_a(rat(-1, 2));
        assert_eq!((plus.b.clone(), plus.c.clone()), (Rational::zero(), rat(1, 2)));
        assert_eq!(recombine(&pf), f);
    }

    #[test]
    fn single_quadratic() {
        let pf = partial_fractions(&parse_expression("1/(x^2-x+1)").unwrap()).unwrap();
        assert_eq!(pf.quadratic_terms.len(), 1);
        assert_eq!(pf.quadratic_terms[0].b, Rational::zero());
        assert_eq!(pf.quadratic_terms[0].c, Rational::one());
    }

    #[test]
    fn polynomial_part_from_long_division() {
        let pf = partial_fractions(&parse_expression("x^2/(1+x)").unwrap()).unwrap();
        assert_eq!(pf.polynomial_part, p(&[-1, 1]));
        assert_eq!(pf.linear_terms[0].numer, Rational::one());
        assert_eq!(pf.linear_terms[0].factor.r, Rational::one());
    }

    #[test]
    fn recombine_trivial_forms() {
        let mut form = PartialFractionForm {
            polynomial_part: Polynomial::one(),
            ..Default::default()
        };
        assert_eq!(recombine(&form), RationalFunction::from_polynomial(Polynomial::one()));
        form.polynomial_part = Polynomial::zero();
        form.linear_terms.push(LinearTerm {
            numer: Rational::one(),
            factor: LinearFactor {
                r: Rational::one(),
                multiplicity: 1,
            },
        });
        assert_eq!(recombine(&form), parse_expression("1/(x+1)").unwrap());
    }

    #[test]
    fn errors() {
        let err = partial_fractions(&parse_expression("1/(1-x)").unwrap()).unwrap_err();
        assert_eq!(err, FactorizeError::PoleInUnitInterval { root: Some(Rational::one()) });
        assert_eq!(err.to_string(), "pole at x = 1 inside closed interval");
        assert!(matches!(
            partial_fractions(&parse_expression("1/x").unwrap()),
            Err(FactorizeError::PoleInUnitInterval { .. })
        ));
        assert!(matches!(
            partial_fractions(&parse_expression("1/(2*x^2-1)").unwrap()),
            Err(FactorizeError::PoleInUnitInterval { root: None })
        ));
        assert!(matches!(
            partial_fractions(&parse_expression("1/(1+x)^2").unwrap()),
            Err(FactorizeError::UnsupportedMultiplicity { multiplicity: 2, .. })
        ));
        assert!(matches!(
            partial_fractions(&parse_expression("1/(x^4+1)").unwrap()),
            Err(FactorizeError::UnsupportedFactor { .. })
        ));
    }

    #[test]
    fn corpus_denominators_are_admissible() {
        for d in ["1+x", "x^2+x+1", "x^2-x+1", "x^2+1", "1+x+x^2+x^3+x^4+x^5"] {
            let f = parse_expression(d).unwrap();
            let fac = factor_denominator(f.numerator());
            assert!(fac.residual.is_one(), "{d}");
            assert_eq!(fac.expand(), f.scaled_numerator());
        }
    }
}
