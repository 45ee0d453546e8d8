//! Polynomial text syntax: `3/2*x1^2*x3 - x2`, `(a+1)*x1`, named parameters.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// Parse `text` as a polynomial. `resolve` maps identifiers to variable
/// indices; `line` and `col0` locate `text` for error messages.
pub fn parse_poly(
    text: &str,
    nvars: usize,
    resolve: &dyn Fn(&str) -> Option<usize>,
    line: usize,
    col0: usize,
) -> Result<Poly> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        nvars,
        resolve,
        line,
        col0,
        len: text.len(),
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Default resolver for `x1..xn`.
pub fn resolve_x(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('x')?;
    let i: usize = rest.parse().ok()?;
    i.checked_sub(1)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    nvars: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
    line: usize,
    col0: usize,
    len: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let byte = self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len);
        Error::parse(self.line, self.col0 + byte + 1, msg)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while self.peek().map(char::is_whitespace).unwrap_or(false) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            if self.peek() == Some('+') {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::from_integer(1.into()) / c)),
                        Some(_) => return Err(self.err("division by zero")),
                        None => return Err(self.err("division by a non-constant")),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(self.nvars, Rational::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let save = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_alphanumeric() || c == '_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                match (self.resolve)(&name) {
                    Some(v) => Ok(Poly::var(self.nvars, v)),
                    None => {
                        self.pos = save;
                        Err(self.err(&format!("unknown indeterminate '{}'", name)))
                    }
                }
            }
            _ => Err(self.err("expected a number, indeterminate or '('")),
        }
    }
}
