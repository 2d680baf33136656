//! The named rings, modules and triples the test suites revolve around.

use std::sync::Arc;

use fphom_core::construction::{
    build_construction, compose_triples, CData, ConstructionKind, ConstructionSpec, RetractTriple,
};
use fphom_core::field::Field;
use fphom_core::matrix::RMatrix;
use fphom_core::module::PresentedModule;
use fphom_core::monomial::MonomialOrder;
use fphom_core::poly::Polynomial;
use fphom_core::ring::PresentedRing;
use fphom_core::text::parse_poly;

pub fn ring(
    field: Field,
    vars: &[&str],
    rels: &[&str],
    weights: Option<Vec<i64>>,
) -> Arc<PresentedRing> {
    let ambient = fphom_core::poly::PolyRing::new(
        field,
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::grevlex(vars.len()),
    )
    .unwrap();
    let rels: Vec<Polynomial> = rels.iter().map(|s| parse_poly(&ambient, s).unwrap()).collect();
    Arc::new(
        PresentedRing::new(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            rels,
            MonomialOrder::grevlex(vars.len()),
            weights,
        )
        .unwrap(),
    )
}

pub fn p(r: &Arc<PresentedRing>, s: &str) -> Polynomial {
    parse_poly(r.ambient(), s).unwrap()
}

/// `Q[x]/(x^3)` — Artinian Gorenstein, dimension 3.
pub fn qx3() -> Arc<PresentedRing> {
    ring(Field::Rationals, &["x"], &["x^3"], Some(vec![1]))
}

/// `Q[x,y]/(x,y)^2` — Artinian non-Gorenstein, dimension 3.
pub fn square_zero() -> Arc<PresentedRing> {
    ring(
        Field::Rationals,
        &["x", "y"],
        &["x^2", "x*y", "y^2"],
        Some(vec![1, 1]),
    )
}

/// `Q[x,y]/(x^2,y^2)` — complete intersection, dimension 4.
pub fn complete_intersection() -> Arc<PresentedRing> {
    ring(
        Field::Rationals,
        &["x", "y"],
        &["x^2", "y^2"],
        Some(vec![1, 1]),
    )
}

/// `F_7[x,y]/(x^2,y^2)`.
pub fn complete_intersection_f7() -> Arc<PresentedRing> {
    ring(
        Field::prime(7).unwrap(),
        &["x", "y"],
        &["x^2", "y^2"],
        Some(vec![1, 1]),
    )
}

/// `Q[x,y]/(x^2, x y, y^3)` — Artinian, dimension 4, socle {x, y^2}.
pub fn mixed_socle() -> Arc<PresentedRing> {
    ring(
        Field::Rationals,
        &["x", "y"],
        &["x^2", "x*y", "y^3"],
        Some(vec![1, 1]),
    )
}

/// The numerical semigroup ring `k[t^3, t^4, t^5]` presented as
/// `Q[x,y,z]/(y^2 - xz, yz - x^3, z^2 - x^2 y)` with weights (3,4,5).
pub fn semigroup() -> Arc<PresentedRing> {
    ring(
        Field::Rationals,
        &["x", "y", "z"],
        &["y^2-x*z", "y*z-x^3", "z^2-x^2*y"],
        Some(vec![3, 4, 5]),
    )
}

/// The rationals as a zero-variable presented ring.
pub fn rationals() -> Arc<PresentedRing> {
    Arc::new(PresentedRing::field_as_ring(Field::Rationals))
}

/// The residue field `k = R/m` as a module.
pub fn residue_field(r: &Arc<PresentedRing>) -> PresentedModule {
    let cols = (0..r.nvars())
        .map(|v| vec![(0usize, r.var(v))])
        .collect::<Vec<_>>();
    let rels = RMatrix { nrows: 1, cols };
    let degrees = r.weights().map(|_| vec![0]);
    PresentedModule::new(r.clone(), 1, rels, degrees).unwrap()
}

/// The maximal ideal as an abstract module.
pub fn max_ideal(r: &Arc<PresentedRing>) -> PresentedModule {
    let gens = (0..r.nvars()).map(|v| r.var(v)).collect();
    PresentedModule::from_ideal(r.clone(), gens).unwrap()
}

/// The canonical ideal `(x, y)` of the semigroup ring as a module.
pub fn canonical_ideal(semigroup: &Arc<PresentedRing>) -> PresentedModule {
    PresentedModule::from_ideal(
        semigroup.clone(),
        vec![semigroup.var(0), semigroup.var(1)],
    )
    .unwrap()
}

pub fn ltimes(r: &Arc<PresentedRing>, c: PresentedModule) -> RetractTriple {
    build_construction(&ConstructionSpec {
        kind: ConstructionKind::TrivialExtension,
        base: r.clone(),
        c_data: CData::Module(c),
        r0: None,
    })
    .unwrap()
}

pub fn bowtie(r: &Arc<PresentedRing>, gens: Vec<Polynomial>) -> RetractTriple {
    build_construction(&ConstructionSpec {
        kind: ConstructionKind::AmalgamatedDuplication,
        base: r.clone(),
        c_data: CData::Ideal(gens),
        r0: None,
    })
    .unwrap()
}

pub fn pseudo(r: &Arc<PresentedRing>, gens: Vec<Polynomial>, r0: Polynomial) -> RetractTriple {
    build_construction(&ConstructionSpec {
        kind: ConstructionKind::PseudocanonicalCover,
        base: r.clone(),
        c_data: CData::Ideal(gens),
        r0: Some(r0),
    })
    .unwrap()
}

/// `(R, R x R, R)`: the trivial extension along the ring itself.
pub fn trivial_self_extension(r: &Arc<PresentedRing>) -> RetractTriple {
    ltimes(r, PresentedModule::free(r.clone(), 1))
}

/// The stacked counterexample triple `(Q, (Q x Q) x (Q x Q), Q)`.
pub fn stacked_triple() -> RetractTriple {
    let q = rationals();
    let inner = trivial_self_extension(&q);
    let outer = trivial_self_extension(inner.extension());
    compose_triples(&inner, &outer).unwrap()
}

/// The amalgamated duplication of the semigroup ring along its canonical
/// ideal `(x, y)`.
pub fn semigroup_bowtie() -> RetractTriple {
    let r = semigroup();
    let gens = vec![r.var(0), r.var(1)];
    bowtie(&r, gens)
}

/// The pseudocanonical cover of the semigroup ring with `r0 = x`.
pub fn semigroup_pseudo() -> RetractTriple {
    let r = semigroup();
    let gens = vec![r.var(0), r.var(1)];
    let r0 = r.var(0);
    pseudo(&r, gens, r0)
}
