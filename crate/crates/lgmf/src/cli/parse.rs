//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := coefficient | variable ('^' posint)? | '(' expr ')' | '-' factor
//! variable := letter+ digit* '\''*
//! ```
//!
//! Trailing apostrophes encode the prime level; coefficients are integers
//! or integer/integer rationals.

use num::{BigInt, BigRational};
use thiserror::Error;

use crate::ring::{Monomial, Polynomial, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown token `{token}` at position {position}")]
    UnknownToken { position: usize, token: String },
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'-') => {
                self.bump();
                Ok(-&self.factor()?)
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.coefficient(),
            Some(c) if c.is_ascii_alphabetic() => self.variable_power(),
            Some(c) => Err(ParseError::UnknownToken {
                position: self.pos,
                token: (c as char).to_string(),
            }),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits");
        text.parse()
            .map_err(|_| self.error(format!("invalid integer `{text}`")))
    }

    fn coefficient(&mut self) -> Result<Polynomial, ParseError> {
        let numer = self.integer()?;
        let denom = if self.peek() == Some(b'/') {
            self.bump();
            let d = self.integer()?;
            if d == BigInt::from(0) {
                return Err(self.error("zero denominator"));
            }
            d
        } else {
            BigInt::from(1)
        };
        Ok(Polynomial::constant(BigRational::new(numer, denom)))
    }

    fn variable_power(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.input[start..self.pos])
            .expect("ascii name")
            .to_owned();
        let mut primes = 0u32;
        while self.input.get(self.pos) == Some(&b'\'') {
            primes += 1;
            self.pos += 1;
        }
        let var = Variable::with_primes(name, primes);
        let exponent = if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            u32::try_from(e.clone()).map_err(|_| self.error(format!("exponent `{e}` too large")))?
        } else {
            1
        };
        if exponent == 0 {
            return Err(self.error("exponents must be positive"));
        }
        Ok(Polynomial::term(
            Monomial::from_exponents([(var, exponent)]),
            BigRational::from_integer(1.into()),
        ))
    }
}

/// Parses a polynomial expression into canonical form.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser::new(text);
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.input.len() {
        let rest: String = text[parser.pos..].chars().take(8).collect();
        return Err(ParseError::UnknownToken {
            position: parser.pos,
            token: rest,
        });
    }
    Ok(poly)
}

/// Canonical text form; `parse_polynomial` inverts it.
pub fn print_polynomial(p: &Polynomial) -> String {
    p.to_string()
}
