//! Text parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := integer ('/' integer)? | variable ('^' integer)?
//! ```
//!
//! Coefficients `a/b` are accepted over every field and mean `a·b⁻¹`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Ring};
use crate::scalar::Scalar;

pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Poly> {
    Parser { src: text, pos: 0, ring }.poly()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(Error::parse("empty expression", self.pos));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return Err(Error::parse(format!("expected `+` or `-`, found `{c}`"), self.pos)),
            };
            first = false;
            let (m, c) = self.term()?;
            acc.add_term(m, if negative { -c } else { c });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut factors = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = &coeff * &self.number()?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let (i, e) = self.power()?;
                    exps[i] = exps[i]
                        .checked_add(e)
                        .ok_or_else(|| Error::parse("exponent overflow", self.pos))?;
                }
                Some(c) if factors == 0 => {
                    return Err(Error::parse(format!("expected a term, found `{c}`"), self.pos))
                }
                None if factors == 0 => return Err(Error::parse("expected a term", self.pos)),
                _ => break,
            }
            factors += 1;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
                match self.peek() {
                    Some(c) if c.is_ascii_alphanumeric() || c == '_' => {}
                    _ => return Err(Error::parse("expected a factor after `*`", self.pos)),
                }
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(Error::parse("expected an integer", start));
        }
        Ok(digits.parse().expect("digit string"))
    }

    fn number(&mut self) -> Result<Scalar> {
        let start = self.pos;
        let num = self.integer()?;
        self.skip_ws();
        let den = if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            self.integer()?
        } else {
            BigInt::from(1)
        };
        self.ring
            .field()
            .from_ratio(&num, &den)
            .ok_or_else(|| Error::parse("division by zero in coefficient", start))
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        let index = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::parse(format!("unknown variable `{name}`"), start))?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok((index, 1));
        }
        self.pos += 1;
        self.skip_ws();
        let epos = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(Error::parse("malformed exponent", epos));
        }
        let e = digits
            .parse::<u32>()
            .map_err(|_| Error::parse("exponent too large", epos))?;
        Ok((index, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    #[test]
    fn pham_brieskorn_relation() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_poly("x^5 + y^3 + z^2", &r).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.to_string(), "x^5 + y^3 + z^2");
    }

    #[test]
    fn russell_relation() {
        let r = ring(&["x", "y", "z", "t"]);
        let f = parse_poly("x + x^2*y + z^2 + t^3", &r).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.to_string(), "x^2*y + t^3 + z^2 + x");
    }

    #[test]
    fn rational_coefficients() {
        let r = ring(&["x", "y"]);
        let q = FieldSpec::Rationals;
        let f = parse_poly("2/3 x^2 - y", &r).unwrap();
        let terms: Vec<_> = f.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect();
        assert_eq!(
            terms,
            vec![
                (vec![0, 1], q.from_i64(-1)),
                (vec![2, 0], q.parse_scalar("2/3").unwrap()),
            ]
        );
    }

    #[test]
    fn rationals_over_prime_field() {
        let r = Ring::new(FieldSpec::prime(7).unwrap(), ["x"]).unwrap();
        let f = parse_poly("1/2 x", &r).unwrap();
        assert_eq!(f.to_string(), "4*x");
        let err = parse_poly("1/7 x", &r).unwrap_err();
        assert_eq!(err.position(), Some(0));
    }

    #[test]
    fn whitespace_and_implicit_products() {
        let r = ring(&["x", "y"]);
        let a = parse_poly("  3 x y^2 -x", &r).unwrap();
        let b = parse_poly("3*x*y^2-x", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("x x", &r).unwrap(), parse_poly("x^2", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(&["x", "y"]);
        let e = parse_poly("x + w", &r).unwrap_err();
        assert_eq!(e.position(), Some(4));
        assert!(e.to_string().contains("unknown variable `w`"));

        let e = parse_poly("x^-1", &r).unwrap_err();
        assert_eq!(e.position(), Some(2));
        assert!(e.to_string().contains("malformed exponent"));

        let e = parse_poly("3/0 y", &r).unwrap_err();
        assert!(e.to_string().contains("division by zero"));

        assert!(parse_poly("", &r).is_err());
        assert!(parse_poly("x +", &r).is_err());
        assert!(parse_poly("x * + y", &r).is_err());
        assert!(parse_poly("(x)", &r).is_err());
    }
}
