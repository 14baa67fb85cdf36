//! Polynomial expressions in `x`.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' digits)?
//! base   := digits ('/' digits)? | 'x' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so `2x^2`, `3/2x` and `(x+1)(x-1)` are accepted.
//! The output of [`RatPoly`]'s `Display` parses back to the same polynomial.

use std::fmt;

use divisorforge::{RatPoly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Character offset into the input, 0-based.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position + 1)
    }
}

impl ParseError {
    /// The input with a caret under the offending character.
    pub fn annotate(&self, source: &str) -> String {
        format!("{self}\n  {source}\n  {}^", " ".repeat(self.position))
    }
}

pub fn parse_poly(text: &str) -> Result<RatPoly, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(e),
        Some(')') => Err(p.error("unmatched ')'")),
        Some(c) => Err(p.unexpected(c)),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn unexpected(&self, c: char) -> ParseError {
        if c.is_alphabetic() {
            self.error(format!("unknown variable '{c}', only x is allowed"))
        } else {
            self.error(format!("unexpected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<RatPoly, ParseError> {
        self.skip_ws();
        let negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || c.is_alphabetic() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatPoly, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits().ok_or_else(|| self.expected("a nonnegative integer exponent"))?;
        let e: usize = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError { position: start, message: format!("exponent exceeds {MAX_EXPONENT}") })?;
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<RatPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(RatPoly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.expected("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) => Err(self.unexpected(c)),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<RatPoly, ParseError> {
        let num: BigInt = self.digits().expect("caller saw a digit").parse().expect("digits");
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(RatPoly::constant(Rational::from_integer(num)));
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let den: BigInt = self.digits().ok_or_else(|| self.expected("an integer denominator"))?.parse().expect("digits");
        if den.is_zero() {
            return Err(ParseError { position: start, message: "zero denominator".into() });
        }
        Ok(RatPoly::constant(Rational::new(num, den)))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn expected(&self, what: &str) -> ParseError {
        match self.peek() {
            None => self.error(format!("expected {what}, found end of input")),
            Some(c) => self.error(format!("expected {what}, found '{c}'")),
        }
    }
}
