//! Text forms of symbolic values.
//!
//! Hurwitz values are shown in polygamma notation,
//! `ζ(m+1, q) = (−1)^{m+1} ψ^{(m)}(q) / m!`. A sum containing a polygamma
//! term is written term by term; any other sum goes over a common denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{factorial, ConstantSymbol, SymbolicValue};
use crate::ratfun::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RenderStyle {
    #[default]
    Ascii,
    Unicode,
    Latex,
}

impl std::str::FromStr for RenderStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Self::Ascii),
            "unicode" => Ok(Self::Unicode),
            "latex" => Ok(Self::Latex),
            _ => Err(format!("unknown render style '{s}'")),
        }
    }
}

struct Term {
    coeff: Rational,
    radicand: u64,
    symbol: ConstantSymbol,
}

pub fn render(v: &SymbolicValue, style: RenderStyle) -> String {
    let terms: Vec<Term> = v
        .terms()
        .map(|(c, s)| {
            let mut coeff = c.q().clone();
            if let ConstantSymbol::HurwitzZeta(w, _) = s {
                // ζ(w, q) = (−1)^w ψ^{(w−1)}(q) / (w−1)!
                coeff /= Rational::from_integer(factorial(w - 1));
                if w % 2 == 1 {
                    coeff = -coeff;
                }
            }
            Term {
                coeff,
                radicand: c.d(),
                symbol: s.clone(),
            }
        })
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    let r = Renderer { style };
    if terms.len() == 1 || terms.iter().any(|t| t.symbol.is_psi()) {
        r.join(terms.iter().map(|t| (t.coeff.is_negative(), r.term(t))))
    } else {
        r.common_denominator(&terms)
    }
}

struct Renderer {
    style: RenderStyle,
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn map_digits(n: u32, table: &[char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| table[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl Renderer {
    fn mul(&self) -> &'static str {
        match self.style {
            RenderStyle::Ascii => "*",
            RenderStyle::Unicode => "",
            RenderStyle::Latex => " ",
        }
    }

    fn minus(&self) -> &'static str {
        match self.style {
            RenderStyle::Unicode => "−",
            _ => "-",
        }
    }

    fn rational(&self, q: &Rational) -> String {
        let sign = if q.is_negative() { self.minus() } else { "" };
        let n = q.numer().abs();
        if q.is_integer() {
            format!("{sign}{n}")
        } else {
            format!("{sign}{n}/{}", q.denom())
        }
    }

    fn sqrt(&self, d: u64) -> String {
        match self.style {
            RenderStyle::Ascii => format!("sqrt({d})"),
            RenderStyle::Unicode => format!("√{d}"),
            RenderStyle::Latex => format!("\\sqrt{{{d}}}"),
        }
    }

    fn atom(&self, s: &ConstantSymbol) -> String {
        use ConstantSymbol::*;
        use RenderStyle::*;
        match (s, self.style) {
            (One, _) => String::new(),
            (PiPow(1), Ascii) => "pi".into(),
            (PiPow(k), Ascii) => format!("pi^{k}"),
            (PiPow(1), Unicode) => "π".into(),
            (PiPow(k), Unicode) => format!("π{}", map_digits(*k, &SUPERSCRIPTS)),
            (PiPow(1), Latex) => "\\pi".into(),
            (PiPow(k), Latex) => format!("\\pi^{{{k}}}"),
            (Zeta(m), Ascii) => format!("zeta({m})"),
            (Zeta(m), Unicode) => format!("ζ({m})"),
            (Zeta(m), Latex) => format!("\\zeta({m})"),
            (HurwitzZeta(w, q), _) => {
                let q = self.rational(q);
                let order = w - 1;
                match (self.style, order) {
                    (Ascii, 1) => format!("psi'({q})"),
                    (Ascii, 2) => format!("psi''({q})"),
                    (Ascii, n) => format!("psi^({n})({q})"),
                    (Unicode, 1) => format!("ψ′({q})"),
                    (Unicode, 2) => format!("ψ″({q})"),
                    (Unicode, n) => format!("ψ⁽{}⁾({q})", map_digits(n, &SUPERSCRIPTS)),
                    (Latex, 1) => format!("\\psi'({q})"),
                    (Latex, 2) => format!("\\psi''({q})"),
                    (Latex, n) => format!("\\psi^{{({n})}}({q})"),
                }
            }
            (PolyLogRational(m, x), Ascii) => format!("polylog({m}, {})", self.rational(x)),
            (PolyLogRational(m, x), Unicode) => {
                format!("Li{}({})", map_digits(*m, &SUBSCRIPTS), self.rational(x))
            }
            (PolyLogRational(m, x), Latex) => {
                format!("\\operatorname{{Li}}_{{{m}}}({})", self.rational(x))
            }
            (UnitCircleLiIm(m, a) | UnitCircleLiRe(m, a), style) => {
                let part = if matches!(s, UnitCircleLiIm(..)) { "Im" } else { "Re" };
                let a = self.rational(a);
                match style {
                    Ascii => format!("{part}(polylog({m}, exp(i*acos({a}))))"),
                    Unicode => format!("{part}[Li{}(e^(i·arccos({a})))]", map_digits(*m, &SUBSCRIPTS)),
                    Latex => format!(
                        "\\operatorname{{{part}}}\\operatorname{{Li}}_{{{m}}}(e^{{i\\arccos({a})}})"
                    ),
                }
            }
        }
    }

    /// `|n|·√d·atom`, omitting unit factors.
    fn product(&self, n: &BigInt, d: u64, s: &ConstantSymbol) -> String {
        let mut parts = Vec::new();
        let bare = d == 1 && *s == ConstantSymbol::One;
        if !n.is_one() || bare {
            parts.push(n.to_string());
        }
        if d != 1 {
            parts.push(self.sqrt(d));
        }
        if *s != ConstantSymbol::One {
            parts.push(self.atom(s));
        }
        parts.join(self.mul())
    }

    fn fraction(&self, num: &str, den: &BigInt) -> String {
        match self.style {
            RenderStyle::Latex => format!("\\frac{{{num}}}{{{den}}}"),
            _ => format!("{num}/{den}"),
        }
    }

    /// Magnitude of one term, sign handled by the caller.
    fn term(&self, t: &Term) -> String {
        let n = t.coeff.numer().abs();
        let den = t.coeff.denom();
        if den.is_one() {
            return self.product(&n, t.radicand, &t.symbol);
        }
        if t.symbol.is_psi() {
            let c = match self.style {
                RenderStyle::Latex => self.fraction(&n.to_string(), den),
                _ => format!("({n}/{den})"),
            };
            let rest = self.product(&BigInt::one(), t.radicand, &t.symbol);
            return format!("{c}{}{rest}", self.mul());
        }
        self.fraction(&self.product(&n, t.radicand, &t.symbol), den)
    }

    fn join(&self, parts: impl Iterator<Item = (bool, String)>) -> String {
        let mut out = String::new();
        for (i, (neg, body)) in parts.enumerate() {
            match (i, neg) {
                (0, true) => out.push_str(self.minus()),
                (0, false) => {}
                (_, true) => {
                    out.push(' ');
                    out.push_str(self.minus());
                    out.push(' ');
                }
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    fn common_denominator(&self, terms: &[Term]) -> String {
        let lcm = terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let body = self.join(terms.iter().map(|t| {
            let n = t.coeff.numer() * (&lcm / t.coeff.denom());
            (n.is_negative(), self.product(&n.abs(), t.radicand, &t.symbol))
        }));
        if lcm.is_one() {
            body
        } else if self.style == RenderStyle::Latex {
            self.fraction(&body, &lcm)
        } else {
            format!("({body})/{lcm}")
        }
    }
}
