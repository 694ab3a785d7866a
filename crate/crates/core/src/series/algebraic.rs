use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ratfun::Rational;

/// Trial-division bound for squarefree decomposition.
const TRIAL_BOUND: u64 = 1_000_000;

/// `q·√d` with `d` a squarefree positive integer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraicScalar {
    q: Rational,
    d: u64,
}

impl AlgebraicScalar {
    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self { q, d: 1 }
    }

    /// `q·√d`; `d` must already be squarefree.
    pub fn new(q: Rational, d: u64) -> Self {
        assert!(d >= 1, "radicand must be positive");
        debug_assert!(squarefree_split(&BigUint::from(d)).is_some_and(|(s, _)| s.is_one()));
        if q.is_zero() {
            Self::zero()
        } else {
            Self { q, d }
        }
    }

    /// Exact `√r` for rational `r ≥ 0`, if the squarefree part of `r` can be determined.
    pub fn sqrt_of(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        // √(n/m) = √(n·m)/m
        let prod = (r.numer() * r.denom()).to_biguint()?;
        let (square, radicand) = squarefree_split(&prod)?;
        let q = Rational::new(BigInt::from(square), r.denom().clone());
        Some(Self::new(q, radicand))
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.q.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.q * r, self.d)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.q.clone(), self.d)
    }

    /// `None` when the product radicand overflows `u64`.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Some(Self::zero());
        }
        // √d₁·√d₂ = g·√(d₁/g · d₂/g), g = gcd(d₁, d₂); both squarefree.
        let g = num_integer::gcd(self.d, rhs.d);
        let d = (self.d / g).checked_mul(rhs.d / g)?;
        let q = &self.q * &rhs.q * Rational::from_integer(BigInt::from(g));
        Some(Self::new(q, d))
    }

    /// Sum when both share the same radicand.
    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(rhs.clone());
        }
        if rhs.is_zero() {
            return Some(self.clone());
        }
        (self.d == rhs.d).then(|| Self::new(&self.q + &rhs.q, self.d))
    }

    /// Multiplicative inverse, `1/(q√d) = √d/(q·d)`.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = Rational::from_integer(BigInt::from(self.d));
        Some(Self::new((&self.q * d).recip(), self.d))
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.q)
        } else {
            write!(f, "({})*sqrt({})", self.q, self.d)
        }
    }
}

/// Writes `n = s²·e` with `e` squarefree; `None` if a cofactor beyond the
/// trial bound cannot be classified or `e` overflows `u64`.
pub(crate) fn squarefree_split(n: &BigUint) -> Option<(BigUint, u64)> {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut radicand = BigUint::one();
    let mut p = 2u64;
    while p <= TRIAL_BOUND && BigUint::from(p * p) <= rest {
        let bp = BigUint::from(p);
        let mut count = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            count += 1;
        }
        if count > 0 {
            square *= bp.pow(count / 2);
            if count % 2 == 1 {
                radicand *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square *= root;
        } else if rest < BigUint::from(TRIAL_BOUND) * BigUint::from(TRIAL_BOUND) {
            // No factor below the bound, so the cofactor is prime.
            radicand *= rest;
        } else {
            return None;
        }
    }
    Some((square, radicand.to_u64()?))
}
