//! Compensated summation and exact Bernoulli numbers shared by the numeric layers.

use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::ratfun::Rational;

/// Neumaier (improved Kahan–Babuška) running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        iter.into_iter().for_each(|x| s.add(x));
        s
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexCompensatedSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexCompensatedSum {
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

const BERNOULLI_TABLE_LEN: usize = 128;

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Akiyama–Tanigawa, giving B_1 = +1/2; the sign of B_1 is fixed below.
        let n = BERNOULLI_TABLE_LEN;
        let mut a: Vec<Rational> = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for m in 0..n {
            a.push(Rational::new(1.into(), (m as i64 + 1).into()));
            for j in (1..=m).rev() {
                a[j - 1] = Rational::from_integer((j as i64).into()) * (&a[j - 1] - &a[j]);
            }
            out.push(a[0].clone());
        }
        out[1] = -out[1].clone();
        out
    })
}

/// Exact Bernoulli number `B_n` (convention `B_1 = −1/2`), `n < 128`.
pub fn bernoulli(n: usize) -> Rational {
    assert!(n < BERNOULLI_TABLE_LEN, "Bernoulli index {n} out of table range");
    bernoulli_table()[n].clone()
}

pub fn bernoulli_f64(n: usize) -> f64 {
    let b = bernoulli(n);
    if b.is_zero() {
        0.0
    } else {
        b.to_f64().unwrap()
    }
}
