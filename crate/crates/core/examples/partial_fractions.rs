//! Parse a rational function, factor its denominator, split it into partial fractions.

use logint::factorize::{factor_denominator, partial_fractions, recombine};
use logint::ratfun::parse_expression;

fn main() {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "(x^3 + 2)/((x+2)*(x^2+x+1)*(x^2+1))".into());
    let f = parse_expression(&expr).expect("valid expression");
    println!("f(x)        = {f}");

    let fac = factor_denominator(f.denominator());
    println!("constant    = {}", fac.constant);
    for l in &fac.linears {
        println!("linear      x + {}  (multiplicity {})", l.r, l.multiplicity);
    }
    for q in &fac.quadratics {
        let angle = q.angle.as_ref().map_or("irrational".to_string(), |t| format!("{t}·pi"));
        println!("quadratic   {}  (angle {angle})", q.polynomial());
    }

    let pf = partial_fractions(&f).expect("admissible denominator");
    if !pf.polynomial_part.is_zero() {
        println!("polynomial  {}", pf.polynomial_part);
    }
    for t in &pf.linear_terms {
        println!("  {} / (x + {})", t.numer, t.factor.r);
    }
    for t in &pf.quadratic_terms {
        println!("  (({})*x + ({})) / ({})", t.b, t.c, t.factor.polynomial());
    }
    assert_eq!(recombine(&pf), f.normalize());
    println!("recombined terms equal f");
}
