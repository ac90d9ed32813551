//! A small expression grammar for exact scalars, used by configuration files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '·' | '/')? unary)*      juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 'q' | 's' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::RatFuncQ;
use crate::error::{Error, Result};

pub(super) fn parse_scalar(input: &str) -> Result<RatFuncQ> {
    let mut p = Parser {
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        input,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing characters"));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFuncQ> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' | '−' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFuncQ> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' | '·' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc / d;
                }
                c if c.is_ascii_digit() || c == 'q' || c == 's' || c == '(' => {
                    acc = acc * self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFuncQ> {
        if matches!(self.peek(), Some('-') | Some('−')) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFuncQ> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = matches!(self.peek(), Some('-') | Some('−'));
            if neg {
                self.pos += 1;
            }
            let e = self.integer()?;
            let e: i32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            if base.is_zero() && (neg || e == 0) {
                return Err(self.err("zero to a non-positive power"));
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<RatFuncQ> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(RatFuncQ::q())
            }
            Some('s') => {
                self.pos += 1;
                Ok(RatFuncQ::s())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFuncQ::from_bigint(self.integer()?)),
            _ => Err(self.err("expected a number, q, s or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::consts;
    use super::*;

    #[test]
    fn parses_config_scalars() {
        assert_eq!(parse_scalar("q^2").unwrap(), RatFuncQ::q_pow(2));
        assert_eq!(parse_scalar("-q^-1").unwrap(), -RatFuncQ::q_pow(-1));
        assert_eq!(parse_scalar("3/2").unwrap(), RatFuncQ::from_ratio(3, 2));
        assert_eq!(parse_scalar("s^2").unwrap(), RatFuncQ::q());
        assert_eq!(parse_scalar("(q + q^-1)^2").unwrap(), consts::qp().pow(2));
        assert_eq!(parse_scalar("2q").unwrap(), RatFuncQ::q() * RatFuncQ::from_int(2));
        assert_eq!(parse_scalar("q·q").unwrap(), RatFuncQ::q_pow(2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("q^").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(q").is_err());
    }
}
