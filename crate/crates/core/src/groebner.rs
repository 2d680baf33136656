//! Ideal-level division and Buchberger's algorithm.

use alloc::vec::Vec;

use crate::modgb::{module_gb, ModVec, RingCtx};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// A reduced Groebner basis: monic elements, mutually tail-reduced, sorted
/// descending by leading monomial. Unique for a given ideal and order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elems: Vec<Polynomial>,
}

/// Full normal form of `f` against `divisors`, choosing at every step the
/// first divisor (in list order) whose leading monomial divides the
/// current lead. Deterministic by construction.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut done: Vec<(crate::monomial::Monomial, crate::field::FieldElem)> = Vec::new();
    'outer: while let Some((m, c)) = work.lead().cloned() {
        for d in divisors {
            if let Some((dm, dc)) = d.lead() {
                if dm.divides(&m) {
                    let shift = dm.quotient_of(&m);
                    let factor = c.div(dc).expect("nonzero lead");
                    work = ring.sub(&work, &ring.mul_term(d, &shift, &factor));
                    continue 'outer;
                }
            }
        }
        done.push((m, c));
        work.terms.remove(0);
    }
    Polynomial { terms: done }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let ctx = RingCtx { ring, ring_gb: &[] };
    let vecs: Vec<ModVec> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ModVec::from_poly(0, g))
        .collect();
    let gb = module_gb(ctx, 1, &vecs);
    GroebnerBasis {
        order: ring.order.clone(),
        elems: gb.entries.iter().map(|e| e.vec.component(0)).collect(),
    }
}

/// `f` lies in the ideal generated by `gens`.
pub fn ideal_membership(ring: &PolyRing, f: &Polynomial, gens: &[Polynomial]) -> bool {
    let gb = buchberger(ring, gens);
    normal_form(ring, f, &gb.elems).is_zero()
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let lcm = fm.lcm(gm);
    let uf = fm.quotient_of(&lcm);
    let ug = gm.quotient_of(&lcm);
    let a = ring.mul_term(f, &uf, &fc.inv().unwrap());
    let b = ring.mul_term(g, &ug, &gc.inv().unwrap());
    ring.sub(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::OrderKind;
    use crate::text::parse_poly;
    use alloc::string::ToString;

    fn ring(vars: &[&str], order: MonomialOrder) -> PolyRing {
        PolyRing::new(
            Field::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
            order,
        )
        .unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn division_single_step() {
        let r = ring(&["x"], MonomialOrder::grevlex(1));
        let nf = normal_form(&r, &p(&r, "x^3+x"), &[p(&r, "x^2")]);
        assert_eq!(nf, p(&r, "x"));
    }

    #[test]
    fn division_by_binomial_rewrites_lead() {
        // normal_form(y^2, {y^2 - x*z}) with y^2 leading under grevlex.
        let r = ring(&["x", "y", "z"], MonomialOrder::grevlex(3));
        let nf = normal_form(&r, &p(&r, "y^2"), &[p(&r, "y^2-x*z")]);
        assert_eq!(nf, p(&r, "x*z"));
    }

    #[test]
    fn division_by_empty_list_is_identity() {
        let r = ring(&["x"], MonomialOrder::grevlex(1));
        let f = p(&r, "x^2+1");
        assert_eq!(normal_form(&r, &f, &[]), f);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = ring(&["x", "y", "z"], MonomialOrder::grevlex(3));
        let basis = [p(&r, "y^2-x*z"), p(&r, "y*z-x^3")];
        let f = p(&r, "x^2*y^2+z^3-y*z");
        let nf = normal_form(&r, &f, &basis);
        assert_eq!(normal_form(&r, &nf, &basis), nf);
    }

    #[test]
    fn monomial_ideal_is_its_own_reduced_basis() {
        let r = ring(&["x", "y"], MonomialOrder::grevlex(2));
        let gens = [p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb.elems, gens.to_vec());
    }

    #[test]
    fn lex_elimination_example() {
        // gens (x - y, y - z) under lex x>y>z reduce to {x - z, y - z}.
        let r = ring(
            &["x", "y", "z"],
            MonomialOrder::simple(OrderKind::Lex, alloc::vec![0, 1, 2]),
        );
        let gb = buchberger(&r, &[p(&r, "x-y"), p(&r, "y-z")]);
        assert_eq!(gb.elems, alloc::vec![p(&r, "x-z"), p(&r, "y-z")]);
    }

    #[test]
    fn semigroup_ideal_membership() {
        let r = ring(&["x", "y", "z"], MonomialOrder::grevlex(3));
        let gens = [p(&r, "y^2-x*z"), p(&r, "y*z-x^3"), p(&r, "z^2-x^2*y")];
        for g in &gens {
            assert!(ideal_membership(&r, g, &gens));
        }
        // x itself is not in the ideal (all generators have degree >= 2).
        assert!(!ideal_membership(&r, &p(&r, "x"), &gens));
        // a random combination is
        let f = r.add(
            &r.mul(&p(&r, "x*y-3"), &gens[0]),
            &r.mul(&p(&r, "z^2"), &gens[2]),
        );
        assert!(ideal_membership(&r, &f, &gens));
    }

    #[test]
    fn s_polynomials_of_basis_reduce_to_zero() {
        let r = ring(&["x", "y", "z"], MonomialOrder::grevlex(3));
        let gb = buchberger(&r, &[p(&r, "y^2-x*z"), p(&r, "y*z-x^3"), p(&r, "z^2-x^2*y")]);
        for i in 0..gb.elems.len() {
            for j in (i + 1)..gb.elems.len() {
                let s = s_polynomial(&r, &gb.elems[i], &gb.elems[j]);
                assert!(normal_form(&r, &s, &gb.elems).is_zero());
            }
        }
    }

    #[test]
    fn basis_invariant_under_generator_permutation() {
        let r = ring(&["x", "y", "z"], MonomialOrder::grevlex(3));
        let a = p(&r, "y^2-x*z");
        let b = p(&r, "y*z-x^3");
        let c = p(&r, "z^2-x^2*y");
        let g1 = buchberger(&r, &[a.clone(), b.clone(), c.clone()]);
        let g2 = buchberger(&r, &[c, a, b]);
        assert_eq!(g1, g2);
    }
}
