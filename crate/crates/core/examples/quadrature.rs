//! The numerical oracle: tanh-sinh and the substituted Gauss–Legendre rule.

use logint::oracle::{integrate_log_power, integrate_log_power_substituted, DEFAULT_REL_TOL};
use logint::ratfun::parse_expression;

fn main() {
    for (expr, p) in [("1/(1+x)", 1), ("1/(x^3+x+1)", 2), ("x^5/(x^2+1)", 4), ("1/(1-x)", 1)] {
        let f = parse_expression(expr).unwrap();
        match integrate_log_power(&f, p, DEFAULT_REL_TOL) {
            Ok(r) => {
                let gl = integrate_log_power_substituted(&f, p, DEFAULT_REL_TOL).unwrap();
                println!(
                    "{expr:<14} p={p}  tanh-sinh {:.15e} (±{:.1e}, {} levels, {} evals)  gauss {:.15e}",
                    r.value, r.est_error, r.levels_used, r.evaluations, gl.value
                );
            }
            Err(e) => println!("{expr:<14} p={p}  {e}"),
        }
    }
}
