//! The polynomial grammar shared by every entry point.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint | 'g' | 'x' | 't' | 'y' | '(' expr ')'
//! ```
//!
//! Integers are packed field elements and `g` is the field's generator, so
//! `g^5*x^2` and `7*x^2` are both valid coefficients. `x` and `t` name the
//! first variable and `y` the second. A bracketed list `[c0, c1, ...]` is read
//! as a coefficient vector instead.

use super::UniPoly;
use crate::bipoly::{BiPoly, BiRing};
use crate::error::{Error, Result};
use crate::field::{parse_elem, Elem, GaloisField};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: BiRing<'a>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer too large"))
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let t = self.unary()?;
                    acc = self.ring.mul(&acc, &t);
                }
                Some(c) if c.is_ascii_digit() || "xtyg(".contains(c) => {
                    let t = self.unary()?;
                    acc = self.ring.mul(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if self.peek() == Some('-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.uint()?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly> {
        let field = self.ring.field();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('x') | Some('t') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some('y') => {
                self.pos += 1;
                Ok(BiPoly::y())
            }
            Some('g') => {
                self.pos += 1;
                Ok(BiPoly::constant(field.generator()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                Ok(BiPoly::constant(field.check(Elem(v))?))
            }
            Some(c) => Err(self.err(&format!("unexpected {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_bipoly(field: &GaloisField, text: &str) -> Result<BiPoly> {
    let mut parser = Parser { chars: text.chars().collect(), pos: 0, ring: BiRing::new(field) };
    let out = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input"));
    }
    Ok(out)
}

/// Parses `[c0, c1, ...]` into element literals.
pub fn parse_elem_list(field: &GaloisField, text: &str) -> Result<Vec<Elem>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {text:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|c| parse_elem(field, c)).collect()
}

/// Parses a univariate polynomial; any single variable name is accepted.
pub fn parse_unipoly(field: &GaloisField, text: &str) -> Result<UniPoly> {
    if text.trim_start().starts_with('[') {
        return Ok(UniPoly::from_coeffs(parse_elem_list(field, text)?));
    }
    let b = parse_bipoly(field, text)?;
    match (b.uses_x(), b.uses_y()) {
        (true, true) => Err(Error::Parse(format!("{text:?} uses two variables"))),
        (false, true) => Ok(b.swap_xy().to_x_poly().expect("single variable")),
        _ => Ok(b.to_x_poly().expect("single variable")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    #[test]
    fn grammar() {
        let f5 = GaloisField::prime(5).unwrap();
        assert_eq!(parse_unipoly(&f5, "x^2 + 2*x + 1").unwrap(), UniPoly::from_u64s(&[1, 2, 1]));
        assert_eq!(parse_unipoly(&f5, "(x+1)^2").unwrap(), UniPoly::from_u64s(&[1, 2, 1]));
        assert_eq!(parse_unipoly(&f5, "-x").unwrap(), UniPoly::from_u64s(&[0, 4]));
        assert_eq!(parse_unipoly(&f5, "3x - y^0").unwrap(), UniPoly::from_u64s(&[4, 3]));
        assert_eq!(parse_unipoly(&f5, "y^3+1").unwrap(), UniPoly::from_u64s(&[1, 0, 0, 1]));
        assert_eq!(parse_unipoly(&f5, "[1, 0, 4]").unwrap(), UniPoly::from_u64s(&[1, 0, 4]));
        assert_eq!(parse_unipoly(&f5, "[]").unwrap(), UniPoly::zero());
        assert!(parse_unipoly(&f5, "x*y").is_err());
        assert!(parse_unipoly(&f5, "x +").is_err());
        assert!(parse_unipoly(&f5, "7*x").is_err());
        assert!(parse_unipoly(&f5, "x)").is_err());
    }

    #[test]
    fn generator_literals() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let g = t.top().generator().unwrap();
        let f = parse_unipoly(t.top(), "g^2*x + g").unwrap();
        assert_eq!(f, UniPoly::from_coeffs(vec![g, t.top().mul(g, g)]));
    }

    #[test]
    fn bivariate() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let b = parse_bipoly(t.top(), "x^3 + y^3 + 1").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.coeff(0, 3), Elem::ONE);
    }
}
