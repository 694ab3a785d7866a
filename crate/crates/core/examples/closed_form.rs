//! Closed forms of ∫₀¹ R(x) logᵖx dx in three render styles.

use logint::engine::{integrate_closed_form, render, RenderStyle};
use logint::ratfun::parse_expression;

fn main() {
    let cases = [
        ("1/(1+x)", 1),
        ("1/(x^2+x+1)", 1),
        ("x/(x^2-x+1)", 2),
        ("(1-x)/(1-x^6)", 2),
        ("1/(x^2+1)", 3),
        ("1/(x^2-x/2+1)", 1),
    ];
    for (expr, p) in cases {
        let f = parse_expression(expr).unwrap();
        let v = integrate_closed_form(&f, p).unwrap();
        println!("∫₀¹ {expr} · log^{p} x dx");
        for style in [RenderStyle::Ascii, RenderStyle::Unicode, RenderStyle::Latex] {
            println!("  {:<8} {}", format!("{style:?}"), render(&v, style));
        }
        println!("  value    {:.15}", v.numeric_value());
    }
}
