//! Multivariate polynomials in canonical form over an exact field.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::AlgError;
use crate::field::{Field, FieldElem};
use crate::monomial::{Monomial, MonomialOrder};

/// The ambient of a polynomial: field, named variables and a monomial order.
///
/// Polynomials do not carry their ambient; operations are methods on the
/// ambient and assume their operands belong to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    pub field: Field,
    pub var_names: Vec<String>,
    pub order: MonomialOrder,
}

/// A polynomial: terms sorted strictly descending in the ambient order,
/// no zero coefficients, no duplicate monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    pub terms: Vec<(Monomial, FieldElem)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, FieldElem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// The common weighted degree of all terms, or `None` if mixed or zero.
    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(weights);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }
}

impl PolyRing {
    pub fn new(
        field: Field,
        var_names: Vec<String>,
        order: MonomialOrder,
    ) -> Result<PolyRing, AlgError> {
        order.validate(var_names.len())?;
        Ok(PolyRing {
            field,
            var_names,
            order,
        })
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn compatible_with(&self, other: &PolyRing) -> Result<(), AlgError> {
        if self == other {
            Ok(())
        } else {
            Err(AlgError::MixedAmbients(String::from(
                "operands come from different polynomial ambients",
            )))
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: FieldElem) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![(Monomial::one(self.nvars()), c)],
            }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            terms: alloc::vec![(Monomial::var(self.nvars(), i), self.field.one())],
        }
    }

    pub fn monomial_elem(&self, m: Monomial, c: FieldElem) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, FieldElem)>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.order.cmp(&f.terms[i].0, &g.terms[j].0) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.terms[i].1.add(&g.terms[j].1);
                    if !c.is_zero() {
                        out.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend_from_slice(&g.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add(f, &self.neg(g))
    }

    /// `f * (c * x^m)`.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(fm, fc)| (fm.mul(m), fc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: &FieldElem) -> Polynomial {
        self.mul_term(f, &Monomial::one(self.nvars()), c)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for (fm, fc) in &f.terms {
            for (gm, gc) in &g.terms {
                terms.push((fm.mul(gm), fc.mul(gc)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Polynomial, n: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.lead() {
            None => Polynomial::zero(),
            Some((_, c)) => {
                let inv = c.inv().expect("lead coefficient is nonzero");
                self.scale(f, &inv)
            }
        }
    }

    /// Canonical compact rendering: descending terms, `*` between factors,
    /// `^` for powers, no spaces. Used verbatim in reports.
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in f.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mon = m.render(&self.var_names);
            if m.is_one() {
                out.push_str(&abs.render());
            } else if abs.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&abs.render());
                out.push('*');
                out.push_str(&mon);
            }
        }
        out
    }
}

/// Wrapper tying a polynomial to an ambient for `Display` in diagnostics.
pub struct ShowPoly<'a>(pub &'a PolyRing, pub &'a Polynomial);

impl fmt::Display for ShowPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.render(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn ring_q(vars: &[&str]) -> PolyRing {
        PolyRing::new(
            Field::Rationals,
            vars.iter().map(|s| String::from(*s)).collect(),
            MonomialOrder::grevlex(vars.len()),
        )
        .unwrap()
    }

    fn p(ring: &PolyRing, s: &str) -> Polynomial {
        parse_poly(ring, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring_q(&["x"]);
        let prod = r.mul(&p(&r, "x+1"), &p(&r, "x-1"));
        assert_eq!(prod, p(&r, "x^2-1"));
    }

    #[test]
    fn char_two_square() {
        let f2 = Field::prime(2).unwrap();
        let r = PolyRing::new(
            f2,
            alloc::vec![String::from("x"), String::from("y")],
            MonomialOrder::grevlex(2),
        )
        .unwrap();
        let s = parse_poly(&r, "x+y").unwrap();
        assert_eq!(r.mul(&s, &s), parse_poly(&r, "x^2+y^2").unwrap());
    }

    #[test]
    fn additive_inverse_gives_empty_terms() {
        let r = ring_q(&["x", "y"]);
        let f = p(&r, "3*x^2*y-y+2");
        let sum = r.add(&f, &r.neg(&f));
        assert!(sum.is_zero());
        assert!(sum.terms.is_empty());
    }

    #[test]
    fn rendering_is_compact_and_canonical() {
        let r = ring_q(&["x", "y"]);
        let f = p(&r, "y - x^2 + 1/2");
        assert_eq!(r.render(&f), "-x^2+y+1/2");
    }
}
