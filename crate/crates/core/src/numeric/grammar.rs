//! Text form of elements.
//!
//! ```text
//! poly    := ws [sign] term (sign term)* ws
//! term    := coeff ["*" "x" ["^" digits]] | "x" ["^" digits]
//! coeff   := digits ["/" digits]
//! sign    := "+" | "-"
//! ```
//!
//! Terms may appear in any order and repeated degrees are summed. The
//! Unicode minus sign (U+2212) is read as `-`. Positions in diagnostics are
//! character offsets into the input.

use num_traits::{One, Signed, Zero};

use super::{Integer, RatPoly, Rational};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let chars = src
            .chars()
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        Cursor { chars, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Result<Integer> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.chars.len()
    }

    /// `x ["^" digits]` after the variable has been seen.
    fn exponent(&mut self) -> Result<usize> {
        if !self.eat('^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.digits()?;
        usize::try_from(e).or_else(|_| {
            self.pos = at;
            self.error("exponent too large")
        })
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        self.skip_ws();
        if self.eat('x') {
            return Ok((Rational::one(), self.exponent()?));
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.error("expected a coefficient or x");
        }
        let num = self.digits()?;
        let coeff = if self.eat('/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                self.pos = at;
                return self.error("zero denominator");
            }
            Rational::new(num, den)
        } else {
            Rational::from_integer(num)
        };
        if self.eat('*') {
            if !self.eat('x') {
                return self.error("expected x after *");
            }
            return Ok((coeff, self.exponent()?));
        }
        Ok((coeff, 0))
    }
}

pub fn parse_poly(text: &str) -> Result<RatPoly> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut negative = cur.sign().unwrap_or(false);
    loop {
        let (c, k) = cur.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        if negative {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
        if cur.at_end() {
            break;
        }
        match cur.sign() {
            Some(s) => negative = s,
            None => return cur.error("expected + or -"),
        }
    }
    Ok(RatPoly::new(coeffs))
}

pub fn parse_integer(text: &str) -> Result<Integer> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let negative = cur.sign().unwrap_or(false);
    let n = cur.digits()?;
    if !cur.at_end() {
        return cur.error("unexpected trailing input");
    }
    Ok(if negative { -n } else { n })
}

/// Canonical text of a polynomial: ascending degree, `0` for zero.
pub fn format_poly(p: &RatPoly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match (k, magnitude.is_one()) {
            (0, _) => out.push_str(&magnitude.to_string()),
            (_, true) => {}
            (_, false) => {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
