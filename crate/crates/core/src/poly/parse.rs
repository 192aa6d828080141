use num_bigint::BigInt;

use crate::algebra::Field;
use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::poly::{Poly, Ring};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := atom ['^' integer]
// atom   := integer ['/' integer] | variable | '(' expr ')'

struct Parser<'a, F: Field> {
    text: &'a [u8],
    pos: usize,
    ring: &'a Ring<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = match u32::try_from(e) {
                Ok(e) if e <= u16::MAX as u32 => e,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let field = self.ring.field();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.integer()?;
                    if den == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                }
                let c = field.from_ratio(&num, &den)?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let pos = self.pos;
                self.pos += 1;
                let name = c as char;
                if self.text.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
                    let end = self.text[pos..]
                        .iter()
                        .position(|c| !c.is_ascii_alphanumeric())
                        .map_or(self.text.len(), |k| pos + k);
                    return Err(Error::UnknownVariable {
                        name: String::from_utf8_lossy(&self.text[pos..end]).into_owned(),
                        pos,
                    });
                }
                match self.ring.slot_of(name) {
                    Some(slot) => Ok(Poly::monomial(self.ring, Monomial::var(slot), field.one())),
                    None => Err(Error::UnknownVariable {
                        name: name.to_string(),
                        pos,
                    }),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

impl<F: Field> Poly<F> {
    /// Parses text such as `y^2 - x*z`, `3/4 x^2 y` or `(x+y)^3` in `ring`.
    pub fn parse(text: &str, ring: &Ring<F>) -> Result<Self> {
        if !text.is_ascii() {
            let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
            return Err(Error::Parse {
                pos,
                msg: "non-ASCII character".into(),
            });
        }
        let mut p = Parser {
            text: text.as_bytes(),
            pos: 0,
            ring,
        };
        let out = p.expr()?;
        if p.peek().is_some() {
            return p.err(format!("unexpected `{}`", p.text[p.pos] as char));
        }
        Ok(out)
    }
}
