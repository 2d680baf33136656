//! Monomials and monomial orders (lex, grevlex, and block products).

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use crate::error::AlgError;

/// Inline exponent storage for the common variable counts.
pub type Exps = SmallVec<[u32; 8]>;

/// An exponent vector of fixed length (the ambient variable count).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: impl Into<Exps>) -> Monomial {
        Monomial { exps: exps.into() }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn render(&self, names: &[String]) -> String {
        use alloc::format;
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if e == 1 {
                out.push_str(&names[i]);
            } else {
                out.push_str(&format!("{}^{}", names[i], e));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order.
///
/// `Simple` applies one comparison to all variables, with `prec` listing
/// variable indices from most to least significant. `Block` compares the
/// grevlex restriction to `first` and breaks ties with `rest` (used for
/// elimination; never surfaced in session files).
///
/// Every variant is a total, multiplicative well-order with 1 minimal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Simple { kind: OrderKind, prec: Vec<usize> },
    Block { first: Vec<usize>, rest: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder::Simple {
            kind: OrderKind::Lex,
            prec: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> MonomialOrder {
        MonomialOrder::Simple {
            kind: OrderKind::GrevLex,
            prec: (0..nvars).collect(),
        }
    }

    pub fn simple(kind: OrderKind, prec: Vec<usize>) -> MonomialOrder {
        MonomialOrder::Simple { kind, prec }
    }

    /// Grevlex on `first`, ties broken by `rest`.
    pub fn block(first: Vec<usize>, rest: MonomialOrder) -> MonomialOrder {
        MonomialOrder::Block {
            first,
            rest: Box::new(rest),
        }
    }

    /// All variable indices, most significant block first.
    pub fn variables(&self) -> Vec<usize> {
        match self {
            MonomialOrder::Simple { prec, .. } => prec.clone(),
            MonomialOrder::Block { first, rest } => {
                let mut v = first.clone();
                v.extend(rest.variables());
                v
            }
        }
    }

    /// Checks the order covers exactly the variables `0..nvars`.
    pub fn validate(&self, nvars: usize) -> Result<(), AlgError> {
        let mut seen = alloc::vec![false; nvars];
        for v in self.variables() {
            if v >= nvars || seen[v] {
                return Err(AlgError::MixedAmbients(String::from(
                    "order does not match the ambient variables",
                )));
            }
            seen[v] = true;
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(AlgError::MixedAmbients(String::from(
                "order does not cover all variables",
            )))
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Simple { kind, prec } => cmp_on(*kind, prec, a, b),
            MonomialOrder::Block { first, rest } => {
                match cmp_on(OrderKind::GrevLex, first, a, b) {
                    Ordering::Equal => rest.cmp(a, b),
                    ord => ord,
                }
            }
        }
    }
}

fn cmp_on(kind: OrderKind, prec: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    match kind {
        OrderKind::Lex => {
            for &v in prec {
                match a.exps()[v].cmp(&b.exps()[v]) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
            Ordering::Equal
        }
        OrderKind::GrevLex => {
            let da: u64 = prec.iter().map(|&v| a.exps()[v] as u64).sum();
            let db: u64 = prec.iter().map(|&v| b.exps()[v] as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                ord => return ord,
            }
            // Equal degree: the last difference decides, smaller exponent wins.
            for &v in prec.iter().rev() {
                match a.exps()[v].cmp(&b.exps()[v]) {
                    Ordering::Equal => {}
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Simple { kind, .. } => match kind {
                OrderKind::Lex => write!(f, "lex"),
                OrderKind::GrevLex => write!(f, "grevlex"),
            },
            MonomialOrder::Block { rest, .. } => write!(f, "block(grevlex;{rest})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::lex(3);
        // x > y^5 under lex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 9])), Ordering::Greater);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::grevlex(3);
        // degree first
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        // same degree: y^2 > x*z (the classic grevlex comparison)
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // x*y > z^2
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn block_order_dominates_on_first_block() {
        // Variables 2,3 form the leading block: any positive degree there wins.
        let o = MonomialOrder::block(alloc::vec![2, 3], MonomialOrder::grevlex(2));
        assert_eq!(
            o.cmp(&m(&[0, 0, 1, 0]), &m(&[5, 5, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&m(&[0, 1, 1, 0]), &m(&[1, 0, 1, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn multiplicative_and_one_minimal() {
        let o = MonomialOrder::grevlex(2);
        let a = m(&[1, 0]);
        let b = m(&[0, 1]);
        let w = m(&[2, 3]);
        let ord = o.cmp(&a, &b);
        assert_eq!(o.cmp(&a.mul(&w), &b.mul(&w)), ord);
        assert_eq!(o.cmp(&Monomial::one(2), &a), Ordering::Less);
    }

    #[test]
    fn zero_variable_ambient() {
        let o = MonomialOrder::grevlex(0);
        assert_eq!(o.cmp(&Monomial::one(0), &Monomial::one(0)), Ordering::Equal);
    }
}
