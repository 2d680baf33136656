fn main() {
    use std::time::Instant;
    use fphom_core::field::Field;
    use fphom_core::modgb::module_gb;
    use fphom_core::module::Restriction;
    use fphom_core::resolution::FreeResolution;
    use fphom_testkit::fixtures;

    for field in [Field::Rationals, Field::prime(32003).unwrap()] {
        let r = fixtures::ring(
            field,
            &["x", "y", "z"],
            &["y^2-x*z", "y*z-x^3", "z^2-x^2*y"],
            Some(vec![3, 4, 5]),
        );
        let gens = vec![r.var(0), r.var(1)];
        let triple = fphom_testkit::fixtures::bowtie(&r, gens);
        let restriction = Restriction::new(&triple.pair.g).unwrap();
        let k_r = fixtures::residue_field(&r);
        let k_s = restriction.restrict(&k_r).unwrap();
        let mut res = FreeResolution::new(&k_s);
        let t = Instant::now();
        res.extend_to(4);
        println!("{:?}: resolution to 4 in {:?}", field, t.elapsed());
        let s = triple.extension().clone();
        let d4t = res.diff(4).transpose();
        let cols = d4t.cols_as_modvecs(&s);
        let t1 = Instant::now();
        let gb = module_gb(s.ctx(), d4t.nrows as u32, &cols);
        println!("{:?}: transpose gb size {} in {:?}", field, gb.entries.len(), t1.elapsed());
    }
}
