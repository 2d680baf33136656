//! Cross-checks of the resolution engine against the dense linear-algebra
//! oracle on Artinian fixtures. Any disagreement here means the Groebner
//! path computed a wrong kernel somewhere.

use fphom_core::module::{hom_module, tensor_module, PresentedModule};
use fphom_core::resolution::{ext_module, free_resolution, tor_module, FreeResolution};
use fphom_core::ring::Dim;
use fphom_testkit::fixtures;
use fphom_testkit::oracle::{self, AlgebraData, ModuleRep};

fn dim_of(m: &PresentedModule) -> u64 {
    match m.k_dim() {
        Dim::Finite(d) => d,
        Dim::Infinite => panic!("expected a finite-dimensional module"),
    }
}

fn check_pair(alg: &AlgebraData, m: &PresentedModule, n: &PresentedModule, max_i: usize) {
    let m_rep = ModuleRep::from_module(m);
    let n_rep = ModuleRep::from_module(n);
    let mut res = FreeResolution::new(m);
    for i in 0..=max_i {
        let engine_ext = dim_of(&ext_module(&mut res, n, i).unwrap());
        let oracle_ext = oracle::ext_dim(alg, &m_rep, &n_rep, i) as u64;
        assert_eq!(engine_ext, oracle_ext, "Ext^{i} mismatch");
        let engine_tor = dim_of(&tor_module(&mut res, n, i).unwrap());
        let oracle_tor = oracle::tor_dim(alg, &m_rep, &n_rep, i) as u64;
        assert_eq!(engine_tor, oracle_tor, "Tor_{i} mismatch");
    }
}

fn check_fixture(r: &std::sync::Arc<fphom_core::ring::PresentedRing>) {
    let alg = AlgebraData::new(r);
    let k = fixtures::residue_field(r);
    let free = PresentedModule::free(r.clone(), 1);
    let m = fixtures::max_ideal(r);
    check_pair(&alg, &k, &k, 3);
    check_pair(&alg, &k, &free, 3);
    check_pair(&alg, &m, &k, 3);
    check_pair(&alg, &k, &m, 3);
    check_pair(&alg, &m, &m, 2);
}

#[test]
fn ext_tor_match_oracle_over_qx3() {
    check_fixture(&fixtures::qx3());
}

#[test]
fn ext_tor_match_oracle_over_square_zero() {
    check_fixture(&fixtures::square_zero());
}

#[test]
fn ext_tor_match_oracle_over_complete_intersection() {
    check_fixture(&fixtures::complete_intersection());
}

#[test]
fn ext_tor_match_oracle_over_f7() {
    check_fixture(&fixtures::complete_intersection_f7());
}

#[test]
fn ext_tor_match_oracle_over_mixed_socle() {
    check_fixture(&fixtures::mixed_socle());
}

#[test]
fn ext_tor_match_oracle_over_trivial_extension_ring() {
    // S = (Q[x]/(x^3)) x R, dimension 6
    let triple = fixtures::trivial_self_extension(&fixtures::qx3());
    let s = triple.extension().clone();
    assert_eq!(s.k_dim(), Dim::Finite(6));
    let alg = AlgebraData::new(&s);
    let k = fixtures::residue_field(&s);
    let free = PresentedModule::free(s.clone(), 1);
    check_pair(&alg, &k, &k, 3);
    check_pair(&alg, &k, &free, 3);
}

#[test]
fn hom_and_tensor_dims_match_oracle() {
    for r in [
        fixtures::qx3(),
        fixtures::square_zero(),
        fixtures::complete_intersection(),
        fixtures::mixed_socle(),
    ] {
        let alg = AlgebraData::new(&r);
        let _ = &alg;
        let k = fixtures::residue_field(&r);
        let m = fixtures::max_ideal(&r);
        let free = PresentedModule::free(r.clone(), 1);
        for (a, b) in [(&k, &m), (&m, &m), (&k, &free), (&m, &free)] {
            let ra = ModuleRep::from_module(a);
            let rb = ModuleRep::from_module(b);
            assert_eq!(
                dim_of(&hom_module(a, b).unwrap().module),
                oracle::hom_dim(&ra, &rb) as u64
            );
            assert_eq!(
                dim_of(&tensor_module(a, b).unwrap().module),
              oracle::tensor_dim(&ra, &rb) as u64
            );
        }
    }
}

#[test]
fn resolutions_are_complexes_and_exact() {
    for r in [
        fixtures::qx3(),
        fixtures::square_zero(),
        fixtures::complete_intersection(),
        fixtures::mixed_socle(),
        fixtures::semigroup(),
    ] {
        let k = fixtures::residue_field(&r);
        let res = free_resolution(&k, 6);
        for i in 1..=5 {
            assert!(res.composes_to_zero(i), "d.d != 0 at {i}");
            assert!(res.exact_at(i), "homology nonzero at {i}");
        }
    }
}

#[test]
fn known_resolution_shapes() {
    // k over Q[x]/(x^3): differentials alternate (x), (x^2)
    let r = fixtures::qx3();
    let k = fixtures::residue_field(&r);
    let mut res = free_resolution(&k, 4);
    res.extend_to(4);
    for i in 1..=4 {
        assert_eq!(res.rank(i), 1);
        let d = res.diff(i);
        let entry = d.entry(0, 0).unwrap();
        let expect = if i % 2 == 1 { "x" } else { "x^2" };
        assert_eq!(r.render(entry), expect);
    }

    // k over Q[x,y]/(x,y)^2: ranks 1, 2, 4, 8
    let r = fixtures::square_zero();
    let k = fixtures::residue_field(&r);
    let res = free_resolution(&k, 3);
    assert_eq!(
        (res.rank(0), res.rank(1), res.rank(2), res.rank(3)),
        (1, 2, 4, 8)
    );

    // a free module resolves to length 0 (zero first differential)
    let free = PresentedModule::free(fixtures::qx3().clone(), 2);
    let res = free_resolution(&free, 3);
    assert_eq!(res.rank(1), 0);
    assert_eq!(res.terminated_at(), Some(1));
}

#[test]
fn known_ext_values() {
    // Ext^1_{Q[x]/(x^3)}(k, R) = 0 (self-injective), Ext^1(k, k) = k
    let r = fixtures::qx3();
    let k = fixtures::residue_field(&r);
    let free = PresentedModule::free(r.clone(), 1);
    let mut res = FreeResolution::new(&k);
    assert_eq!(dim_of(&ext_module(&mut res, &free, 1).unwrap()), 0);
    assert_eq!(dim_of(&ext_module(&mut res, &k, 1).unwrap()), 1);
    assert_eq!(dim_of(&tor_module(&mut res, &k, 0).unwrap()), 1);
}
