//! Periodic series Σ U_k(a)/(k+s)^w rewritten as Hurwitz zeta combinations.

use logint::ratfun::rat;
use logint::series::{chebyshev_u, periodic_sum, sine_profile};

fn main() {
    for a in [rat(0, 1), rat(1, 2), rat(-1, 2)] {
        let u: Vec<String> = (0..8).map(|k| chebyshev_u(k, &a).to_string()).collect();
        println!("U_k({a}) = {} ...", u.join(", "));
    }

    // sin((k+1)t) for t = π/3, then Σ sin((k+1)t)/(k+1)^2.
    let profile = sine_profile(&rat(1, 3)).unwrap();
    for (w, shift) in [(2, 1), (3, 1), (3, 2)] {
        let combo = periodic_sum(&profile, w, shift);
        let mut parts: Vec<String> = combo
            .terms
            .iter()
            .map(|(c, q)| format!("({c})*zeta({w}, {q})"))
            .collect();
        parts.extend(combo.correction_terms().iter().map(|c| format!("({c})")));
        let direct: f64 = (0..200_000u64)
            .map(|k| profile.value(k as i64 + 1).to_f64() / ((k + shift) as f64).powi(w as i32))
            .sum();
        println!("w={w} shift={shift}: {}", parts.join(" + "));
        println!("  combo {:.12}  direct {:.12}", combo.numeric_value(), direct);
    }
}
