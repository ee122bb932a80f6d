//! Parser for exact number literals.
//!
//! ```text
//! expr     := rational | surd
//! surd     := "sqrt(" uint ")" | "(" int ("+"|"-") "sqrt(" uint ")" ")/" nzint
//! rational := int ["/" nzint]
//! ```
//!
//! Whitespace is allowed between tokens and a leading sign may precede a bare
//! `sqrt(D)`. Surds print back in the `(P+sqrt(D))/Q` form accepted here.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::Int;
use crate::surd::{Number, QuadSurd};

pub const GRAMMAR: &str = "expr := rational | surd ; \
surd := \"sqrt(\" uint \")\" | \"(\" int (\"+\"|\"-\") \"sqrt(\" uint \")\" \")/\" nzint ; \
rational := int [\"/\" nzint]";

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{tok}`")))
        }
    }

    fn sign(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        }
    }

    fn uint<T: Int>(&mut self) -> Result<T> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start, "expected digits"));
        }
        self.src[start..self.pos]
            .parse::<T>()
            .map_err(|_| Error::syntax(start, "integer out of range"))
    }

    fn int<T: Int>(&mut self) -> Result<T> {
        let neg = self.sign();
        let v: T = self.uint()?;
        Ok(if neg { -v } else { v })
    }

    fn nzint<T: Int>(&mut self) -> Result<T> {
        self.skip_ws();
        let at = self.pos;
        let v: T = self.int()?;
        if v.is_zero() {
            return Err(Error::syntax(at, "denominator must be nonzero"));
        }
        Ok(v)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(Error::syntax(self.pos, "unexpected trailing input"))
        }
    }
}

/// Parses a surd or rational literal.
pub fn parse_number<T: Int>(text: &str) -> Result<Number<T>> {
    let mut c = Cursor { src: text, pos: 0 };
    c.skip_ws();
    let save = c.pos;
    let neg = c.sign();
    if c.eat("sqrt(") {
        let d: T = c.uint()?;
        c.expect(")")?;
        c.finish()?;
        let q = if neg { -T::one() } else { T::one() };
        return Ok(Number::Surd(QuadSurd::new(T::zero(), d, q)?));
    }
    c.pos = save;
    if c.eat("(") {
        let p: T = c.int()?;
        c.skip_ws();
        let minus = match c.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => return Err(Error::syntax(c.pos, "expected `+` or `-`")),
        };
        c.pos += 1;
        c.expect("sqrt(")?;
        let d: T = c.uint()?;
        c.expect(")")?;
        c.expect(")")?;
        c.expect("/")?;
        let q: T = c.nzint()?;
        c.finish()?;
        // (P − √D)/Q = (−P + √D)/(−Q)
        let s = if minus {
            QuadSurd::new(-p, d, -q)?
        } else {
            QuadSurd::new(p, d, q)?
        };
        return Ok(Number::Surd(s));
    }
    let n: T = c.int()?;
    let den = if c.eat("/") { c.nzint()? } else { T::one() };
    c.finish()?;
    Ok(Number::Rational(Ratio::new(n, den)))
}

/// Parses a literal that must denote a rational number.
pub fn parse_rational<T: Int>(text: &str) -> Result<Ratio<T>> {
    match parse_number(text)? {
        Number::Rational(r) => Ok(r),
        Number::Surd(_) => Err(Error::syntax(0, "expected a rational literal")),
    }
}
