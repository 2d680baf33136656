//! Finitely presented commutative rings `k[x_1..x_n]/I` and validated ring
//! homomorphisms.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgError;
use crate::field::Field;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::modgb::RingCtx;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::report::{CheckReport, Verdict, Witness};

/// A finite or infinite k-dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dim {
    Finite(u64),
    Infinite,
}

impl core::fmt::Display for Dim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "inf"),
        }
    }
}

/// A quotient `k[x_1..x_n]/I` with a cached reduced Groebner basis of `I`.
///
/// Elements are polynomials kept in normal form, so equality of ring
/// elements is term-by-term equality.
#[derive(Clone, Debug)]
pub struct PresentedRing {
    ambient: PolyRing,
    relations: Vec<Polynomial>,
    gb: GroebnerBasis,
    weights: Option<Vec<i64>>,
}

impl PartialEq for PresentedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gb.elems == other.gb.elems
    }
}
impl Eq for PresentedRing {}

impl PresentedRing {
    pub fn new(
        field: Field,
        var_names: Vec<String>,
        relations: Vec<Polynomial>,
        order: MonomialOrder,
        weights: Option<Vec<i64>>,
    ) -> Result<PresentedRing, AlgError> {
        let ambient = PolyRing::new(field, var_names, order)?;
        // canonicalize: callers may have built the relations under another order
        let relations: Vec<Polynomial> = relations
            .into_iter()
            .map(|p| ambient.from_terms(p.terms))
            .collect();
        if let Some(w) = &weights {
            if w.len() != ambient.nvars() || w.iter().any(|&x| x <= 0) {
                return Err(AlgError::Unsupported(
                    "weights must be positive, one per variable".to_string(),
                ));
            }
            for r in &relations {
                if !r.is_zero() && r.homogeneous_degree(w).is_none() {
                    return Err(AlgError::InhomogeneousRelation(ambient.render(r)));
                }
            }
        }
        let gb = buchberger(&ambient, &relations);
        Ok(PresentedRing {
            ambient,
            relations,
            gb,
            weights,
        })
    }

    /// The coefficient field viewed as a ring (zero variables).
    pub fn field_as_ring(field: Field) -> PresentedRing {
        PresentedRing::new(field, Vec::new(), Vec::new(), MonomialOrder::grevlex(0), None)
            .expect("trivial ambient")
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn field(&self) -> Field {
        self.ambient.field
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    pub fn ctx(&self) -> RingCtx<'_> {
        RingCtx {
            ring: &self.ambient,
            ring_gb: &self.gb.elems,
        }
    }

    /// Canonical representative.
    pub fn nf(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ambient, f, &self.gb.elems)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.nf(&self.ambient.one())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.nf(&self.ambient.var(i))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        // normal forms are closed under addition
        self.ambient.add(f, g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.ambient.sub(f, g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.ambient.neg(f)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.nf(&self.ambient.mul(f, g))
    }

    pub fn is_zero_elem(&self, f: &Polynomial) -> bool {
        self.nf(f).is_zero()
    }

    pub fn eq_elems(&self, f: &Polynomial, g: &Polynomial) -> bool {
        self.nf(&self.ambient.sub(f, g)).is_zero()
    }

    pub fn render(&self, f: &Polynomial) -> String {
        self.ambient.render(f)
    }

    /// True when every variable has a pure power among the leading
    /// monomials, i.e. the quotient is a finite-dimensional k-space.
    pub fn is_artinian(&self) -> bool {
        // the zero ring (1 in the ideal)
        if self.gb.elems.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return true;
        }
        'vars: for v in 0..self.nvars() {
            for g in &self.gb.elems {
                let lm = g.lead_monomial().unwrap();
                if lm.exps()[v] > 0 && lm.exps().iter().enumerate().all(|(u, &e)| u == v || e == 0)
                {
                    continue 'vars;
                }
            }
            return false;
        }
        true
    }

    /// The standard monomials (complement of the leading-term ideal),
    /// ascending in the ring order. Only for Artinian rings.
    pub fn std_monomials(&self) -> Result<Vec<Monomial>, AlgError> {
        if !self.is_artinian() {
            return Err(AlgError::NotArtinian);
        }
        let lt: Vec<Monomial> = self
            .gb
            .elems
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect();
        let mut bound = alloc::vec![0u32; self.nvars()];
        for v in 0..self.nvars() {
            for lm in &lt {
                if lm.exps()[v] > 0 && lm.exps().iter().enumerate().all(|(u, &e)| u == v || e == 0)
                {
                    bound[v] = bound[v].max(lm.exps()[v]);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u32; self.nvars()];
        loop {
            let m = Monomial::from_exps(cur.clone());
            if !lt.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer over the box [0, bound)
            let mut v = 0;
            loop {
                if v == self.nvars() {
                    out.sort_by(|a, b| self.ambient.order.cmp(a, b));
                    return Ok(out);
                }
                cur[v] += 1;
                if cur[v] < bound[v].max(1) {
                    break;
                }
                cur[v] = 0;
                v += 1;
            }
        }
    }

    pub fn k_dim(&self) -> Dim {
        match self.std_monomials() {
            Ok(m) => Dim::Finite(m.len() as u64),
            Err(_) => Dim::Infinite,
        }
    }

    /// Number of standard monomials of weighted degree `d` (graded rings).
    pub fn hilbert_value(&self, d: i64) -> u64 {
        let w = self.weights.as_ref().expect("graded ring");
        let lt: Vec<&Monomial> = self
            .gb
            .elems
            .iter()
            .map(|g| g.lead_monomial().unwrap())
            .collect();
        count_std_of_degree(&lt, w, self.nvars(), d)
    }

    /// Samples a deterministic sequence of ring elements (for randomized
    /// conformance tests); `seed` drives a small xorshift generator.
    pub fn sample_elements(&self, count: usize, max_degree: u32, seed: u64) -> Vec<Polynomial> {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut terms = Vec::new();
            let nterms = (next() % 3 + 1) as usize;
            for _ in 0..nterms {
                let mut exps = alloc::vec![0u32; self.nvars()];
                let mut budget = max_degree;
                for e in exps.iter_mut() {
                    let step = (next() % (budget as u64 + 1)) as u32;
                    *e = step;
                    budget -= step;
                }
                let c = (next() % 7) as i64 - 3;
                terms.push((Monomial::from_exps(exps), self.field().from_i64(c)));
            }
            out.push(self.nf(&self.ambient.from_terms(terms)));
        }
        out
    }
}

fn count_std_of_degree(lt: &[&Monomial], weights: &[i64], nvars: usize, d: i64) -> u64 {
    fn rec(
        lt: &[&Monomial],
        weights: &[i64],
        exps: &mut Vec<u32>,
        v: usize,
        remaining: i64,
        count: &mut u64,
    ) {
        if v == exps.len() {
            if remaining == 0 {
                let m = Monomial::from_exps(exps.clone());
                if !lt.iter().any(|l| l.divides(&m)) {
                    *count += 1;
                }
            }
            return;
        }
        let w = weights[v];
        let max = if w > 0 { remaining / w } else { 0 };
        for e in 0..=max {
            exps[v] = e as u32;
            rec(lt, weights, exps, v + 1, remaining - e * w, count);
        }
        exps[v] = 0;
    }
    if d < 0 {
        return 0;
    }
    let mut exps = alloc::vec![0u32; nvars];
    let mut count = 0;
    rec(lt, weights, &mut exps, 0, d, &mut count);
    count
}

/// A ring homomorphism given by images of the domain variables, validated
/// to kill every defining relation of the domain.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub domain: Arc<PresentedRing>,
    pub codomain: Arc<PresentedRing>,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(
        domain: Arc<PresentedRing>,
        codomain: Arc<PresentedRing>,
        images: Vec<Polynomial>,
    ) -> Result<RingMap, AlgError> {
        if images.len() != domain.nvars() {
            return Err(AlgError::MixedAmbients(
                "one image per domain variable required".to_string(),
            ));
        }
        let images: Vec<Polynomial> = images.iter().map(|p| codomain.nf(p)).collect();
        let map = RingMap {
            domain,
            codomain,
            images,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn identity(ring: &Arc<PresentedRing>) -> RingMap {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        RingMap {
            domain: ring.clone(),
            codomain: ring.clone(),
            images,
        }
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Re-checks that all domain relations map to zero.
    pub fn validate(&self) -> Result<(), AlgError> {
        for r in self.domain.relations() {
            let img = self.apply_raw(r);
            if !img.is_zero() {
                return Err(AlgError::RelationNotRespected {
                    relation: self.domain.render(r),
                    image: self.codomain.render(&img),
                });
            }
        }
        Ok(())
    }

    fn apply_raw(&self, f: &Polynomial) -> Polynomial {
        let cod = &self.codomain;
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            let mut term = cod.ambient().constant(c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let powed = cod.ambient().pow(&self.images[v], e);
                    term = cod.ambient().mul(&term, &powed);
                }
            }
            acc = cod.ambient().add(&acc, &term);
        }
        cod.nf(&acc)
    }

    /// Image of a domain element (result in normal form).
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.apply_raw(f)
    }

    /// `other . self` (apply `self` first).
    pub fn then(&self, other: &RingMap) -> Result<RingMap, AlgError> {
        if self.codomain.as_ref() != other.domain.as_ref() {
            return Err(AlgError::MixedAmbients(
                "composition needs matching rings".to_string(),
            ));
        }
        let images = self.images.iter().map(|p| other.apply(p)).collect();
        Ok(RingMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            images,
        })
    }

    /// Degree shift of a graded map, if both rings are graded and each
    /// variable image is homogeneous of the same shifted degree.
    pub fn is_graded(&self) -> bool {
        let (Some(dw), Some(cw)) = (self.domain.weights(), self.codomain.weights()) else {
            return false;
        };
        self.images.iter().enumerate().all(|(v, img)| {
            img.is_zero() || img.homogeneous_degree(cw) == Some(dw[v])
        })
    }
}

/// A retract pair: `f: R -> S`, `g: S -> R` with `g . f = id_R`.
#[derive(Clone, Debug)]
pub struct RetractPair {
    pub f: RingMap,
    pub g: RingMap,
}

impl RetractPair {
    pub fn new(f: RingMap, g: RingMap) -> Result<RetractPair, AlgError> {
        if f.codomain.as_ref() != g.domain.as_ref() || f.domain.as_ref() != g.codomain.as_ref() {
            return Err(AlgError::MixedAmbients(
                "retract pair must connect the same two rings".to_string(),
            ));
        }
        let pair = RetractPair { f, g };
        if let Some(witness) = pair.failing_generator() {
            return Err(AlgError::NotARetract { generator: witness });
        }
        Ok(pair)
    }

    pub fn base(&self) -> &Arc<PresentedRing> {
        &self.f.domain
    }

    pub fn extension(&self) -> &Arc<PresentedRing> {
        &self.f.codomain
    }

    fn failing_generator(&self) -> Option<String> {
        let r = &self.f.domain;
        for v in 0..r.nvars() {
            let back = self.g.apply(&self.f.apply(&r.var(v)));
            if !r.eq_elems(&back, &r.var(v)) {
                return Some(r.ambient().var_names[v].clone());
            }
        }
        None
    }
}

/// Checks `g(f(x_i)) = x_i` on every generator.
pub fn verify_retract(pair: &RetractPair) -> CheckReport {
    match pair.failing_generator() {
        None => CheckReport::new("retract.identity", Verdict::Pass),
        Some(generator) => CheckReport::new("retract.identity", Verdict::Fail).with_witness(
            Witness::Element {
                label: "generator".to_string(),
                value: generator,
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn q_ring(vars: &[&str], rels: &[&str]) -> Arc<PresentedRing> {
        let ambient = PolyRing::new(
            Field::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::grevlex(vars.len()),
        )
        .unwrap();
        let rels = rels.iter().map(|s| parse_poly(&ambient, s).unwrap()).collect();
        Arc::new(
            PresentedRing::new(
                Field::Rationals,
                vars.iter().map(|s| s.to_string()).collect(),
                rels,
                MonomialOrder::grevlex(vars.len()),
                None,
            )
            .unwrap(),
        )
    }

    #[test]
    fn truncated_powers_normalize() {
        let r = q_ring(&["x"], &["x^3"]);
        let f = parse_poly(r.ambient(), "x^3+x").unwrap();
        assert_eq!(r.nf(&f), parse_poly(r.ambient(), "x").unwrap());
    }

    #[test]
    fn square_zero_max_ideal_dimension() {
        let r = q_ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(r.k_dim(), Dim::Finite(3));
        let mons = r.std_monomials().unwrap();
        assert_eq!(mons.len(), 3);
    }

    #[test]
    fn semigroup_ring_grading_accepted() {
        let ambient = PolyRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
            MonomialOrder::grevlex(3),
        )
        .unwrap();
        let rels: Vec<Polynomial> = ["y^2-x*z", "y*z-x^3", "z^2-x^2*y"]
            .iter()
            .map(|s| parse_poly(&ambient, s).unwrap())
            .collect();
        let r = PresentedRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
            rels.clone(),
            MonomialOrder::grevlex(3),
            Some(alloc::vec![3, 4, 5]),
        );
        assert!(r.is_ok());
        let r = r.unwrap();
        assert_eq!(r.k_dim(), Dim::Infinite);
        // degrees of the relations under (3,4,5) are 8, 9, 10
        assert_eq!(rels[0].homogeneous_degree(&[3, 4, 5]), Some(8));
        assert_eq!(rels[1].homogeneous_degree(&[3, 4, 5]), Some(9));
        assert_eq!(rels[2].homogeneous_degree(&[3, 4, 5]), Some(10));
        // an inhomogeneous relation is rejected
        let bad = PresentedRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
            alloc::vec![parse_poly(&ambient, "x+y^2").unwrap()],
            MonomialOrder::grevlex(3),
            Some(alloc::vec![3, 4, 5]),
        );
        assert!(matches!(bad, Err(AlgError::InhomogeneousRelation(_))));
    }

    #[test]
    fn semigroup_hilbert_values_count_gaps() {
        let r = {
            let ambient = PolyRing::new(
                Field::Rationals,
                alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
                MonomialOrder::grevlex(3),
            )
            .unwrap();
            let rels = ["y^2-x*z", "y*z-x^3", "z^2-x^2*y"]
                .iter()
                .map(|s| parse_poly(&ambient, s).unwrap())
                .collect();
            PresentedRing::new(
                Field::Rationals,
                alloc::vec!["x".to_string(), "y".to_string(), "z".to_string()],
                rels,
                MonomialOrder::grevlex(3),
                Some(alloc::vec![3, 4, 5]),
            )
            .unwrap()
        };
        // dim R_d = 1 exactly when d lies in the numerical semigroup <3,4,5>
        let expected = [1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1];
        for (d, &e) in expected.iter().enumerate() {
            assert_eq!(r.hilbert_value(d as i64), e, "degree {d}");
        }
    }

    #[test]
    fn ring_map_validation() {
        let dom = q_ring(&["x"], &["x^2"]);
        let cod = q_ring(&["x"], &["x^3"]);
        let img = alloc::vec![cod.var(0)];
        // x^2 maps to x^2 != 0 in Q[x]/(x^3)
        let err = RingMap::new(dom, cod.clone(), img).unwrap_err();
        assert!(matches!(err, AlgError::RelationNotRespected { .. }));
    }

    #[test]
    fn retract_identity_detects_corruption() {
        let r = q_ring(&["x"], &["x^3"]);
        let s = q_ring(&["x", "e"], &["x^3", "e^2"]);
        let f = RingMap::new(r.clone(), s.clone(), alloc::vec![s.var(0)]).unwrap();
        let g = RingMap::new(s.clone(), r.clone(), alloc::vec![r.var(0), r.zero()]).unwrap();
        let pair = RetractPair::new(f.clone(), g).unwrap();
        assert!(verify_retract(&pair).passed());

        // corrupt g: send x to 0 as well
        let g_bad = RingMap::new(s, r.clone(), alloc::vec![r.zero(), r.zero()]).unwrap();
        let bad = RetractPair::new(f, g_bad);
        assert!(matches!(bad, Err(AlgError::NotARetract { .. })));
    }
}
