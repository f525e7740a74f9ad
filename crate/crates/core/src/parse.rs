//! Recursive-descent parser for field expressions.
//!
//! Grammar (whitespace free between tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)*
//! atom   := integer | generator | '(' expr ')'
//! ```
//!
//! Generators are written `t1`, `t2`, ...; a bare `t` is an alias for `t1`.
//! Exponents are (possibly negative, possibly parenthesized) integers.
//! Rationals are ordinary divisions: `3/4`. Errors carry the byte offset of
//! the offending token; division by a zero element is reported as such.

use num_bigint::BigInt;

use crate::field::FormalElement;
use crate::{Error, Result};

const MAX_EXPONENT: i64 = 4096;
const MAX_GENERATOR: usize = 64;

/// Parse an expression into a canonical field element.
pub fn parse_element(text: &str) -> Result<FormalElement> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).map_or(false, u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FormalElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FormalElement> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                acc = acc.div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FormalElement> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<FormalElement> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            let e = self.exponent()?;
            base = base.pow_i(e)?;
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let e = self.signed_integer()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')' after exponent"));
            }
            return Ok(e);
        }
        self.signed_integer()
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as i64))
                .filter(|v| *v <= MAX_EXPONENT)
                .ok_or_else(|| self.err("exponent too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer exponent"));
        }
        self.skip_ws();
        Ok(if neg { -value } else { value })
    }

    fn atom(&mut self) -> Result<FormalElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(b't') => self.generator(),
            Some(_) => Err(self.err("expected a number, generator, or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<FormalElement> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'.') {
            return Err(self.err("decimal literals are not field elements; write a ratio m/n"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let n: BigInt = digits.parse().expect("digit string parses");
        self.skip_ws();
        Ok(FormalElement::from_rational(crate::Rational::from_integer(n)))
    }

    fn generator(&mut self) -> Result<FormalElement> {
        debug_assert_eq!(self.peek(), Some(b't'));
        self.pos += 1;
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let index = if self.pos == start {
            1usize // bare `t` aliases `t1`
        } else {
            let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
            digits
                .parse::<usize>()
                .ok()
                .filter(|&i| i >= 1 && i <= MAX_GENERATOR)
                .ok_or_else(|| {
                    self.pos = start;
                    self.err("generator index out of range")
                })?
        };
        self.skip_ws();
        Ok(FormalElement::var(index - 1))
    }
}
