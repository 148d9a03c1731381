//! Text grammar for polynomials and linear forms.
//!
//! ```text
//! poly   := ws term (ws ("+"|"-") ws term)* ws | "0"
//! term   := [sign] integer ("*" factor)* | [sign] factor ("*" factor)*
//! factor := ident ["^" [sign] integer]
//! ident  := letter (letter|digit|"_")*
//! ```

use super::{Basis, Exponent, LaurentPoly};
use crate::error::{Error, Result};

struct RawTerm {
    pos: usize,
    coeff: i64,
    exp: Vec<i64>,
    /// Number of factors written, counting repeats.
    factors: usize,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    basis: &'a Basis,
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, basis: &'a Basis) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            basis,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Optional run of `+`/`-` signs; returns true when negative.
    fn sign(&mut self) -> bool {
        let mut neg = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'-') => neg = !neg,
                Some(b'+') => {}
                _ => return neg,
            }
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<i64>()
            .or_else(|_| syntax(start, format!("integer `{digits}` out of range")))
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return syntax(start, "expected a variable name"),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let src: &'a [u8] = self.src;
        Ok((
            start,
            std::str::from_utf8(&src[start..self.pos]).expect("ascii identifier"),
        ))
    }

    fn factor(&mut self, exp: &mut [i64]) -> Result<()> {
        let (_, name) = self.ident()?;
        let i = self.basis.index_of(name)?;
        let power = if self.eat(b'^') {
            let neg = self.sign();
            let n = self.integer()?;
            if neg {
                -n
            } else {
                n
            }
        } else {
            1
        };
        exp[i] = exp[i]
            .checked_add(power)
            .ok_or(Error::Overflow("exponent in parsed term"))?;
        Ok(())
    }

    fn term(&mut self, outer_neg: bool) -> Result<RawTerm> {
        let neg = self.sign() ^ outer_neg;
        self.skip_ws();
        let pos = self.pos;
        let mut exp = vec![0i64; self.basis.rank()];
        let mut factors = 0;
        let mut coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.integer()?,
            Some(c) if c.is_ascii_alphabetic() => {
                self.factor(&mut exp)?;
                factors += 1;
                1
            }
            Some(c) => return syntax(pos, format!("unexpected `{}`", c as char)),
            None => return syntax(pos, "unexpected end of input"),
        };
        while self.eat(b'*') {
            self.factor(&mut exp)?;
            factors += 1;
        }
        if neg {
            coeff = -coeff;
        }
        Ok(RawTerm {
            pos,
            coeff,
            exp,
            factors,
        })
    }

    fn terms(&mut self) -> Result<Vec<RawTerm>> {
        self.skip_ws();
        if self.peek().is_none() {
            return syntax(self.pos, "empty input");
        }
        let mut out = vec![self.term(false)?];
        loop {
            self.skip_ws();
            let neg = match self.peek() {
                None => break,
                Some(b'+') => false,
                Some(b'-') => true,
                Some(c) => {
                    return syntax(self.pos, format!("expected `+` or `-`, found `{}`", c as char))
                }
            };
            self.pos += 1;
            out.push(self.term(neg)?);
        }
        Ok(out)
    }
}

pub(super) fn parse_poly(s: &str, basis: &Basis) -> Result<LaurentPoly> {
    let terms = Parser::new(s, basis).terms()?;
    LaurentPoly::from_terms(basis, terms.into_iter().map(|t| (t.exp, t.coeff)))
}

/// Parses an integer linear combination of basis variables such as
/// `"4*m1"` or `"-1*m1 + 2*m2"` into its coefficient vector. A lone `0`
/// yields the zero vector.
pub fn parse_linear_form(s: &str, basis: &Basis) -> Result<Exponent> {
    let terms = Parser::new(s, basis).terms()?;
    let mut out = vec![0i64; basis.rank()];
    for t in terms {
        if t.factors == 0 {
            if t.coeff == 0 {
                continue;
            }
            return syntax(t.pos, "constant term in a linear form");
        }
        let ones: Vec<usize> = t
            .exp
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect();
        if t.factors != 1 || ones.len() != 1 || t.exp[ones[0]] != 1 {
            return syntax(
                t.pos,
                "expected `<integer>*<variable>` with exponent 1 in a linear form",
            );
        }
        let i = ones[0];
        out[i] = out[i]
            .checked_add(t.coeff)
            .ok_or(Error::Overflow("linear form"))?;
    }
    Ok(Exponent::new(out))
}
