//! Scalar text grammar.
//!
//! ```text
//! rat    := int | int "/" posint
//! term   := rat | rat "*" "z" ["^" posint] | "z" ["^" posint]
//! scalar := term (("+"|"-") term)*
//! ```
//!
//! A leading sign is accepted on the first term. Whitespace is ignored.

use core::fmt;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::rational::{parse_uint, Rational};
use super::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// byte offset into the input
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.pos, self.msg)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError { pos: self.i, msg: msg.into() }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let txt = core::str::from_utf8(&self.s[start..self.i]).unwrap_or("");
        parse_uint(txt).ok_or(ParseError { pos: start, msg: "expected digits".into() })
    }

    fn posint(&mut self) -> Result<BigInt, ParseError> {
        let at = self.i;
        let v = self.digits()?;
        if v.is_zero() {
            return Err(ParseError { pos: at, msg: "expected positive integer".into() });
        }
        Ok(v)
    }

    /// Exponent after `z`, default 1.
    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.eat(b'^') {
            let at = self.i;
            let e = self.posint()?;
            e.to_usize().ok_or(ParseError { pos: at, msg: "exponent too large".into() })
        } else {
            Ok(1)
        }
    }
}

pub(crate) fn parse_scalar(text: &str, n: u32) -> Result<Scalar, ParseError> {
    let mut c = Cursor { s: text.as_bytes(), i: 0 };
    let mut poly: Vec<Rational> = Vec::new();
    let mut neg = c.eat(b'-');
    if !neg {
        c.eat(b'+');
    }
    loop {
        let (coef, power) = match c.peek() {
            Some(b'z') => {
                c.i += 1;
                (Rational::ONE, c.exponent()?)
            }
            Some(b) if b.is_ascii_digit() => {
                let num = c.digits()?;
                let r = if c.eat(b'/') {
                    let den = c.posint()?;
                    Rational::from_bigints(num, den)
                } else {
                    Rational::from_bigints(num, BigInt::from(1))
                };
                if c.eat(b'*') {
                    if c.peek() != Some(b'z') {
                        return Err(c.err("expected 'z' after '*'"));
                    }
                    c.i += 1;
                    (r, c.exponent()?)
                } else {
                    (r, 0)
                }
            }
            Some(_) => return Err(c.err("expected a term")),
            None => return Err(c.err("unexpected end of input")),
        };
        // reduce z^k with k ≥ n right away so huge exponents stay cheap
        let power = power % n as usize;
        if poly.len() <= power {
            poly.resize(power + 1, Rational::ZERO);
        }
        let coef = if neg { -coef } else { coef };
        poly[power] = &poly[power] + &coef;
        match c.peek() {
            None => break,
            Some(b'+') => {
                c.i += 1;
                neg = false;
            }
            Some(b'-') => {
                c.i += 1;
                neg = true;
            }
            Some(_) => return Err(c.err("expected '+' or '-'")),
        }
    }
    if poly.is_empty() {
        poly = vec![Rational::ZERO];
    }
    Ok(Scalar::from_coeffs(n, poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn plain_fraction() {
        assert_eq!(Scalar::parse("3/2", 1).unwrap(), Scalar::from_frac(1, 3, 2));
        assert_eq!(Scalar::parse("-7", 1).unwrap(), Scalar::from_int(1, -7));
    }

    #[test]
    fn z_terms() {
        let x = Scalar::parse("z^2-1/3", 5).unwrap();
        let expect = &Scalar::zeta_pow(5, 2) - &Scalar::from_frac(5, 1, 3);
        assert_eq!(x, expect);
        assert!(Scalar::parse("z^4", 4).unwrap().is_one());
        assert_eq!(Scalar::parse("2*z + 1/2*z", 3).unwrap(), Scalar::parse("5/2*z", 3).unwrap());
    }

    #[test]
    fn errors_carry_position() {
        let e = Scalar::parse("1/0", 1).unwrap_err();
        assert!(matches!(e, crate::exactfield::FieldError::Parse(ParseError { pos: 2, .. })));
        assert!(Scalar::parse("", 1).is_err());
        assert!(Scalar::parse("2*y", 3).is_err());
        assert!(Scalar::parse("1+", 3).is_err());
        assert!(Scalar::parse("z^0", 3).is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        for t in ["0", "1", "-1/3+z^2", "-z", "3/2*z^3", "5-z+2*z^2"] {
            let s = Scalar::parse(t, 8).unwrap();
            assert_eq!(Scalar::parse(&s.to_string(), 8).unwrap(), s);
        }
    }
}
