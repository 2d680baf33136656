//! Plain-text polynomial syntax shared by tests and the session format.
//!
//! A polynomial is a `+`/`-` separated list of terms; a term is a product
//! of an optional coefficient (`3`, `3/2`) and variable powers (`x`,
//! `x^2`), with `*` or whitespace between factors.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::field::FieldElem;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.msg)
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer out of range".to_string(),
            })
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if (c as char).is_ascii_alphabetic() || c == b'_') {
            return None;
        }
        self.pos += 1;
        while matches!(self.peek(), Some(c) if (c as char).is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Some(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
    }
}

/// Parses a polynomial over the given ambient.
pub fn parse_poly(ring: &PolyRing, src: &str) -> Result<Polynomial, ParseError> {
    let mut sc = Scanner::new(src);
    let mut terms: Vec<(Monomial, FieldElem)> = Vec::new();
    sc.skip_ws();
    if sc.peek().is_none() {
        return sc.err("empty polynomial");
    }
    let mut first = true;
    loop {
        sc.skip_ws();
        let mut sign = 1i64;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sign = -1;
                sc.bump();
            }
            None if !first => break,
            None => return sc.err("empty polynomial"),
            _ if first => {}
            _ => return sc.err("expected '+' or '-' between terms"),
        }
        first = false;
        let (mon, coeff) = parse_term(ring, &mut sc, sign)?;
        terms.push((mon, coeff));
        sc.skip_ws();
        if sc.peek().is_none() {
            break;
        }
    }
    Ok(ring.from_terms(terms))
}

fn parse_term(
    ring: &PolyRing,
    sc: &mut Scanner,
    sign: i64,
) -> Result<(Monomial, FieldElem), ParseError> {
    let mut coeff = ring.field.from_i64(sign);
    let mut exps = alloc::vec![0u32; ring.nvars()];
    let mut saw_factor = false;
    loop {
        sc.skip_ws();
        match sc.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = sc.integer()?;
                let mut value = ring.field.from_i64(num);
                if sc.peek() == Some(b'/') {
                    sc.bump();
                    let den_pos = sc.pos;
                    let den = sc.integer()?;
                    value = ring.field.from_ratio(num, den).map_err(|e| ParseError {
                        pos: den_pos,
                        msg: e.to_string(),
                    })?;
                }
                coeff = coeff.mul(&value);
                saw_factor = true;
            }
            Some(c) if (c as char).is_ascii_alphabetic() || c == b'_' => {
                let pos = sc.pos;
                let name = sc.ident().unwrap();
                let var = ring
                    .var_names
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| ParseError {
                        pos,
                        msg: alloc::format!("unknown variable '{name}'"),
                    })?;
                let mut e = 1u32;
                if sc.peek() == Some(b'^') {
                    sc.bump();
                    sc.skip_ws();
                    if !matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
                        return sc.err("expected exponent after '^'");
                    }
                    e = sc.integer()? as u32;
                }
                exps[var] += e;
                saw_factor = true;
            }
            _ => break,
        }
        sc.skip_ws();
        if sc.peek() == Some(b'*') {
            sc.bump();
            sc.skip_ws();
            // a '*' must be followed by another factor
            match sc.peek() {
                Some(c) if c.is_ascii_digit() || (c as char).is_ascii_alphabetic() || c == b'_' => {}
                _ => return sc.err("expected factor after '*'"),
            }
        }
    }
    if !saw_factor {
        return sc.err("expected a term");
    }
    Ok((Monomial::from_exps(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;

    fn ring() -> PolyRing {
        PolyRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
            MonomialOrder::grevlex(3),
        )
        .unwrap()
    }

    #[test]
    fn parses_signs_and_powers() {
        let r = ring();
        let f = parse_poly(&r, "-2*x^2 y + z - 1/3").unwrap();
        assert_eq!(r.render(&f), "-2*x^2*y+z-1/3");
    }

    #[test]
    fn rejects_double_caret_with_position() {
        let r = ring();
        let err = parse_poly(&r, "x^^3").unwrap_err();
        assert_eq!(err.pos, 2);
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = ring();
        assert!(parse_poly(&r, "x+w").is_err());
    }

    #[test]
    fn parse_then_render_round_trips() {
        let r = ring();
        for s in ["x^2-y*z", "x*y*z", "1", "-x+2*y-3*z+4"] {
            let f = parse_poly(&r, s).unwrap();
            assert_eq!(parse_poly(&r, &r.render(&f)).unwrap(), f);
        }
    }
}
