//! Recursive-descent parser for homogeneous relation strings.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := [integer '*'] factor ('*' factor)*
//! factor := 'x' index ['^' positive-integer]
//! ```
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExponentVector, Polynomial};
use crate::error::{Error, Result};
use crate::exactlin::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        let at = self.pos;
        match self.digits() {
            Some(s) => s.parse().map_err(|_| Error::Parse {
                pos: at,
                msg: format!("{what} too large"),
            }),
            None => self.err(format!("expected {what}")),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        if self.peek() != Some(b'x') {
            return self.err("expected variable 'x<index>'");
        }
        self.pos += 1;
        let index = self.small_int("variable index")? as usize;
        if index >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index,
                vars: self.nvars,
            });
        }
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.small_int("exponent")?;
            if e == 0 {
                return self.err("exponent must be positive");
            }
        }
        exps[index] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(ExponentVector, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0u32; self.nvars];
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let s = self.digits().unwrap();
            coeff = s.parse().expect("digit string");
            match self.peek() {
                Some(b'.') | Some(b'/') => return self.err("non-integer coefficient"),
                Some(b'*') => self.pos += 1,
                _ => return self.err("expected '*' after coefficient"),
            }
        }
        self.factor(&mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((ExponentVector(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.nvars);
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (exps, c) = self.term()?;
            p.add_term(exps, Rational::from_integer(sign * c));
            match self.peek() {
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                None => break,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(p)
    }
}

/// Parses a polynomial in variables `x0 .. x{nvars-1}` with integer coefficients.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Polynomial> {
    if !text.is_ascii() {
        let pos = text
            .char_indices()
            .find(|(_, c)| !c.is_ascii())
            .map_or(0, |(i, _)| i);
        return Err(Error::Parse {
            pos,
            msg: "non-ASCII input".into(),
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.poly()?;
    debug_assert!(poly.terms().values().all(|c| !c.is_zero()));
    Ok(poly)
}
