//! Recursive-descent reader for integrand expressions.
//!
//! ```text
//! expr    := term (('+'|'-') term)* ;
//! term    := factor (('*'|'/') factor)* ;
//! factor  := base ('^' INTEGER)? ;
//! base    := 'x' | NUMBER | '(' expr ')' | '-' factor ;
//! NUMBER  := INTEGER ('/' INTEGER)? | INTEGER '.' DIGITS ;
//! ```
//!
//! A literal `a/b` is a single token, so `2/3^2` reads as `(2/3)^2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, RatFunError, Rational, RationalFunction};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

const BASE_START: &[&str] = &["x", "number", "(", "-"];

/// Parses `text` into a normalized rational function with exact coefficients.
pub fn parse_expression(text: &str) -> Result<RationalFunction, RatFunError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error(&["end of input", "+", "-", "*", "/", "^"]));
    }
    Ok(value.normalize())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, expected: &[&str]) -> RatFunError {
        RatFunError::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, RatFunError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, RatFunError> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == b'*' { acc.mul(&rhs) } else { acc.div(&rhs)? };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalFunction, RatFunError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let Some(digits) = self.digits() else {
                return Err(self.error(&["integer exponent"]));
            };
            let exp: u32 = match digits.parse() {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => return Err(RatFunError::ExponentTooLarge { offset: start }),
            };
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RationalFunction, RatFunError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(RationalFunction::from_polynomial(Polynomial::x()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(&[")", "+", "-", "*", "/", "^"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.number()?;
                Ok(RationalFunction::from_polynomial(Polynomial::constant(value)))
            }
            _ => Err(self.error(BASE_START)),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn number(&mut self) -> Result<Rational, RatFunError> {
        let int: BigInt = self.digits().unwrap().parse().unwrap();
        // Decimal literal: INTEGER '.' DIGITS, no whitespace inside.
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            let Some(frac) = self.digits().map(str::to_owned) else {
                return Err(self.error(&["digit"]));
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac: BigInt = frac.parse().unwrap();
            return Ok(Rational::new(int * &scale + frac, scale));
        }
        // Fraction literal: INTEGER '/' INTEGER. Only taken when a digit follows the slash.
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            if let Some(den) = self.digits() {
                let den: BigInt = den.parse().unwrap();
                if den.is_zero() {
                    return Err(RatFunError::DivisionByZeroPoly);
                }
                return Ok(Rational::new(int, den));
            }
        }
        self.pos = save;
        Ok(Rational::new(int, BigInt::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn atomic() {
        let f = parse_expression("1/(1+x)").unwrap();
        assert_eq!(f.numerator(), &Polynomial::one());
        assert_eq!(f.denominator(), &p(&[1, 1]));
        assert_eq!(f.scale(), &Rational::one());
    }

    #[test]
    fn cancels_one_minus_x() {
        let f = parse_expression("(1-x)/(1-x^6)").unwrap();
        assert_eq!(f.numerator(), &Polynomial::one());
        assert_eq!(f.denominator(), &p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(f.scale(), &Rational::one());
    }

    #[test]
    fn unbalanced_paren() {
        match parse_expression("1/(x") {
            Err(RatFunError::Syntax { offset, expected }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&")".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(matches!(
            parse_expression("2x"),
            Err(RatFunError::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(
            parse_expression("1/(x-x)"),
            Err(RatFunError::DivisionByZeroPoly)
        );
        assert_eq!(parse_expression("3/0"), Err(RatFunError::DivisionByZeroPoly));
    }

    #[test]
    fn decimals_are_exact() {
        let f = parse_expression("0.5*x + 1.25").unwrap();
        let g = parse_expression("(1/2)*x + 5/4").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn caret_binds_tighter_than_unary_minus() {
        let f = parse_expression("-x^2").unwrap();
        assert_eq!(f.scaled_numerator(), p(&[0, 0, -1]));
    }

    #[test]
    fn fraction_literal_is_atomic() {
        let f = parse_expression("2/3^2").unwrap();
        assert_eq!(f.scale(), &Rational::new(4.into(), 9.into()));
        let g = parse_expression("2/(3^2)").unwrap();
        assert_eq!(g.scale(), &Rational::new(2.into(), 9.into()));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_expression(" ( 1 - x ) / ( 1 - x ^ 6 ) ").unwrap(),
            parse_expression("(1-x)/(1-x^6)").unwrap()
        );
    }

    #[test]
    fn huge_exponent_rejected() {
        assert!(matches!(
            parse_expression("x^100000"),
            Err(RatFunError::ExponentTooLarge { offset: 2 })
        ));
    }

    #[test]
    fn missing_operand() {
        assert!(matches!(
            parse_expression("1+"),
            Err(RatFunError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(parse_expression(""), Err(RatFunError::Syntax { offset: 0, .. })));
    }
}
