//! Text syntax for polynomials.
//!
//! `x[i][j]` is the main variable in row `i`, column `j`; `x[i]` abbreviates
//! `x[i][1]`; `s[k]` is the k-th parameter. Coefficients are integers or
//! rationals `a/b`. Operators: `+ - * ^` and parentheses. Floating point
//! literals are rejected; `/` is only valid inside a rational literal.

use crate::poly::Poly;
use crate::var::VarIndex;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.pos >= p.src.len() {
        return Err(p.err("empty polynomial"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(&format!("unexpected character '{}'", p.src[p.pos] as char)));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}' {what}", b as char)))
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = &acc * &f;
            } else if self.peek() == Some(b'/') {
                return Err(self.err("'/' is only allowed inside a rational literal, directly after an integer"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        if self.eat(b'-') {
            let f = self.factor()?;
            return Ok(-f);
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ParseError { offset: start, message: "exponent too large".into() })?;
            self.reject_float()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                self.expect(b')', "to close parenthesis")?;
                Ok(e)
            }
            Some(b'x') | Some(b's') => self.variable(),
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) => Err(self.err(&format!("expected a term, found '{}'", c as char))),
            None => Err(self.err("expected a term, found end of input")),
        }
    }

    fn variable(&mut self) -> Result<Poly, ParseError> {
        let kind = self.src[self.pos];
        self.pos += 1;
        self.expect(b'[', "after variable name")?;
        let start = self.pos;
        let first = self.index()?;
        self.expect(b']', "after index")?;
        if kind == b's' {
            if self.peek() == Some(b'[') {
                return Err(self.err("parameters take a single index"));
            }
            return Ok(Poly::var(VarIndex::param(first)));
        }
        if self.eat(b'[') {
            let col = self.index()?;
            self.expect(b']', "after column index")?;
            Ok(Poly::var(VarIndex::main(first, col)))
        } else {
            // x[i] is sugar for x[i][1]
            let _ = start;
            Ok(Poly::var(VarIndex::main(first, 1)))
        }
    }

    fn index(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.integer()?;
        let n: u32 = n
            .try_into()
            .map_err(|_| ParseError { offset: start, message: "index too large".into() })?;
        if n == 0 {
            return Err(ParseError { offset: start, message: "indices are 1-based".into() });
        }
        Ok(n)
    }

    fn rational(&mut self) -> Result<Poly, ParseError> {
        let numer = self.integer()?;
        self.reject_float()?;
        if self.eat(b'/') {
            let start = self.pos;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err("expected denominator digits after '/'"));
            }
            let denom = self.integer()?;
            self.reject_float()?;
            if denom.is_zero() {
                return Err(ParseError { offset: start, message: "zero denominator".into() });
            }
            return Ok(Poly::constant(BigRational::new(numer, denom)));
        }
        Ok(Poly::constant(BigRational::from(numer)))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn reject_float(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(b'.') {
            return Err(self.err("floating point literals are not allowed; use rationals like 3/2"));
        }
        Ok(())
    }
}
