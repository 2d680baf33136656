use std::time::Instant;
use fphom_core::check::*;
use fphom_core::module::{PresentedModule, Restriction};
use fphom_testkit::fixtures;

#[test]
fn probe_theorem_a_s_side() {
    let t0 = Instant::now();
    let triple = fixtures::semigroup_bowtie();
    let s = triple.extension().clone();
    let k_r = fixtures::residue_field(triple.base());
    let restriction = Restriction::new(&triple.pair.g).unwrap();
    let k_s = restriction.restrict(&k_r).unwrap();
    println!("[{:?}] k over S built: gens {}", t0.elapsed(), k_s.gens());

    let free_s = PresentedModule::free(s.clone(), 1);
    let gc = gc_dimension(&k_s, &free_s, 4, 4).unwrap();
    println!("[{:?}] gc_S(k, S) = {}", t0.elapsed(), gc.value);
    for l in &gc.levels {
        println!("  level {}: passed={} detail={:?}", l.level, l.passed, l.detail);
    }
}
