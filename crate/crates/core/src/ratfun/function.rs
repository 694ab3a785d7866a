use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use super::{Polynomial, RatFunError, Rational};

/// `scale · numerator(x) / denominator(x)`.
///
/// After [`RationalFunction::normalize`] the numerator and denominator are
/// coprime and monic, and `scale` carries the full leading-coefficient ratio
/// (sign included). The zero function normalizes to `0 / 1` with scale `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
    scale: Rational,
}

impl RationalFunction {
    /// Builds `num / den` without normalizing. Fails if `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::DivisionByZeroPoly);
        }
        Ok(Self {
            numerator: num,
            denominator: den,
            scale: Rational::one(),
        })
    }

    /// Builds and normalizes `num / den`.
    pub fn normalized(num: Polynomial, den: Polynomial) -> Result<Self, RatFunError> {
        Ok(Self::new(num, den)?.normalize())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one()).unwrap().normalize()
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero() || self.numerator.is_zero()
    }

    /// `scale · numerator`, i.e. the numerator over the stored denominator.
    pub fn scaled_numerator(&self) -> Polynomial {
        self.numerator.scale(&self.scale)
    }

    /// Cancels the polynomial gcd and makes both polynomials monic.
    pub fn normalize(&self) -> Self {
        let num = self.scaled_numerator();
        if num.is_zero() {
            return Self {
                numerator: Polynomial::zero(),
                denominator: Polynomial::one(),
                scale: Rational::zero(),
            };
        }
        let g = Polynomial::gcd(&num, &self.denominator);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = self.denominator.exact_div(&g).expect("gcd divides denominator");
        let scale = num.leading().unwrap() / den.leading().unwrap();
        Self {
            numerator: num.monic(),
            denominator: den.monic(),
            scale,
        }
    }

    /// Horner evaluation of both polynomials, times the scale.
    pub fn eval_at(&self, x: f64) -> Result<f64, RatFunError> {
        let den = self.denominator.eval_f64(x);
        if den.abs() < 1e-300 {
            return Err(RatFunError::PoleEvaluation { x });
        }
        Ok(self.scale.to_f64().unwrap_or(f64::NAN) * self.numerator.eval_f64(x) / den)
    }

    /// Number of distinct real poles in `[0, 1]` (exact, Sturm sequence on the reduced denominator).
    pub fn poles_in_unit_interval(&self) -> usize {
        let reduced = self.normalize();
        reduced
            .denominator
            .count_real_roots_in(&Rational::zero(), &Rational::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.scaled_numerator() * &rhs.denominator)
            + &(&rhs.scaled_numerator() * &self.denominator);
        let den = &self.denominator * &rhs.denominator;
        Self::new(num, den).unwrap().normalize()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: self.numerator.clone(),
            denominator: self.denominator.clone(),
            scale: -self.scale.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.scaled_numerator() * &rhs.scaled_numerator(),
            &self.denominator * &rhs.denominator,
        )
        .unwrap()
        .normalize()
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, RatFunError> {
        let divisor_num = rhs.scaled_numerator();
        if divisor_num.is_zero() {
            return Err(RatFunError::DivisionByZeroPoly);
        }
        Ok(Self::new(
            &self.scaled_numerator() * &rhs.denominator,
            &self.denominator * &divisor_num,
        )?
        .normalize())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::new(self.scaled_numerator().pow(exp), self.denominator.pow(exp))
            .unwrap()
            .normalize()
    }
}

impl fmt::Display for RationalFunction {
    /// Renders in the expression grammar; `parse_expression` reads it back exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let scale = if self.scale.is_integer() {
            format!("{}", self.scale.numer())
        } else {
            format!("{}/{}", self.scale.numer(), self.scale.denom())
        };
        write!(f, "({scale})*({})/({})", self.numerator, self.denominator)
    }
}
