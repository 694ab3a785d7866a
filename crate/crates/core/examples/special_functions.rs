//! Zeta, Hurwitz zeta, polygamma, polylogarithm and Clausen values.

use logint::ratfun::rat;
use logint::specfun::{catalan, clausen2, clausen2_pi, dilog, hurwitz_zeta, polygamma, polylog, zeta};
use num_complex::Complex64;

fn main() {
    for m in 2..=7 {
        println!("zeta({m})          = {:.16}", zeta(m));
    }
    for q in [rat(1, 6), rat(1, 4), rat(1, 3), rat(2, 3)] {
        println!("zeta(2, {q:<3})      = {:.16}", hurwitz_zeta(2, &q).unwrap());
    }
    println!("psi'(1/3)        = {:.16}", polygamma(1, &rat(1, 3)).unwrap());
    println!("psi''(1/4)       = {:.16}", polygamma(2, &rat(1, 4)).unwrap());
    println!("Li2(-1)          = {:.16}", dilog(Complex64::new(-1.0, 0.0)).unwrap().re);
    println!("Li3(1/2)         = {:.16}", polylog(3, Complex64::new(0.5, 0.0)).unwrap().re);
    let w = Complex64::from_polar(1.0, 1.0);
    println!("Li2(e^i)         = {:.16}", dilog(w).unwrap());
    println!("Cl2(1)           = {:.16}", clausen2(1.0));
    println!("Cl2(pi/3)        = {:.16}", clausen2_pi(&rat(1, 3)));
    println!("catalan          = {:.16}", catalan());
}
