//! Finitely presented modules over presented rings: kernels, Hom, tensor,
//! annihilators, k-dimensions, Matlis duality, restriction of scalars.
//!
//! Everything reduces to module Groebner bases over the ring's polynomial
//! ambient. A module is the cokernel of its presentation matrix; module
//! elements are vectors over the generators.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::AlgError;
use crate::matrix::RMatrix;
use crate::modgb::{gb_with_syzygies, module_gb, prune_generators, Lifter, ModGb, ModVec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::report::{CheckReport, Verdict, Witness};
use crate::ring::{Dim, PresentedRing, RingMap};

#[derive(Debug)]
struct ModuleInner {
    ring: Arc<PresentedRing>,
    gens: usize,
    rels: RMatrix,
    gen_degrees: Option<Vec<i64>>,
    rel_gb: OnceBox<ModGb>,
}

/// A finitely presented module: the cokernel of `rels` acting on a free
/// module with `gens` generators. Cheap to clone.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    inner: Arc<ModuleInner>,
}

impl PresentedModule {
    pub fn new(
        ring: Arc<PresentedRing>,
        gens: usize,
        rels: RMatrix,
        gen_degrees: Option<Vec<i64>>,
    ) -> Result<PresentedModule, AlgError> {
        if rels.nrows != gens {
            return Err(AlgError::MixedAmbients(
                "presentation rows must match the generator count".to_string(),
            ));
        }
        if let Some(d) = &gen_degrees {
            if d.len() != gens {
                return Err(AlgError::MixedAmbients(
                    "one degree per generator required".to_string(),
                ));
            }
            let w = ring.weights().ok_or_else(|| {
                AlgError::Unsupported("generator degrees need a graded ring".to_string())
            })?;
            for j in 0..rels.ncols() {
                let col = rels.col_to_modvec(&ring, j);
                if !col.is_zero() && col.homogeneous_degree(w, d).is_none() {
                    return Err(AlgError::InhomogeneousRelation(alloc::format!(
                        "presentation column {j}"
                    )));
                }
            }
        }
        Ok(PresentedModule {
            inner: Arc::new(ModuleInner {
                ring,
                gens,
                rels,
                gen_degrees,
                rel_gb: OnceBox::new(),
            }),
        })
    }

    pub fn free(ring: Arc<PresentedRing>, n: usize) -> PresentedModule {
        let degrees = ring.weights().map(|_| alloc::vec![0; n]);
        PresentedModule::new(ring, n, RMatrix::zero(n, 0), degrees).expect("free module")
    }

    pub fn free_shifted(ring: Arc<PresentedRing>, degrees: Vec<i64>) -> PresentedModule {
        let n = degrees.len();
        let degrees = ring.weights().map(|_| degrees);
        PresentedModule::new(ring, n, RMatrix::zero(n, 0), degrees).expect("free module")
    }

    /// An ideal as an abstract module: the generators are the ideal
    /// generators and the presentation is their syzygy matrix.
    pub fn from_ideal(
        ring: Arc<PresentedRing>,
        gens: Vec<Polynomial>,
    ) -> Result<PresentedModule, AlgError> {
        let gens: Vec<Polynomial> = gens.iter().map(|g| ring.nf(g)).collect();
        if gens.iter().any(|g| g.is_zero()) {
            return Err(AlgError::BadConstruction(
                "zero generator in an ideal presentation".to_string(),
            ));
        }
        let row = RMatrix {
            nrows: 1,
            cols: gens.iter().map(|g| alloc::vec![(0usize, g.clone())]).collect(),
        };
        let syz = syzygy_matrix(&ring, &row);
        let degrees = match ring.weights() {
            Some(w) => {
                let mut d = Vec::with_capacity(gens.len());
                for g in &gens {
                    match g.homogeneous_degree(w) {
                        Some(deg) => d.push(deg),
                        None => return Ok(PresentedModule::new(ring, gens.len(), syz, None)?),
                    }
                }
                Some(d)
            }
            None => None,
        };
        PresentedModule::new(ring, gens.len(), syz, degrees)
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.inner.ring
    }

    pub fn gens(&self) -> usize {
        self.inner.gens
    }

    pub fn rels(&self) -> &RMatrix {
        &self.inner.rels
    }

    pub fn gen_degrees(&self) -> Option<&[i64]> {
        self.inner.gen_degrees.as_deref()
    }

    pub fn same_ring(&self, other: &PresentedModule) -> Result<(), AlgError> {
        if self.ring().as_ref() == other.ring().as_ref() {
            Ok(())
        } else {
            Err(AlgError::MixedAmbients(
                "modules live over different rings".to_string(),
            ))
        }
    }

    /// Groebner basis of the relation submodule, cached.
    pub fn rel_gb(&self) -> &ModGb {
        self.inner.rel_gb.get_or_init(|| {
            let cols = self.inner.rels.cols_as_modvecs(&self.inner.ring);
            alloc::boxed::Box::new(module_gb(
                self.inner.ring.ctx(),
                self.inner.gens as u32,
                &cols,
            ))
        })
    }

    /// Canonical representative of an element.
    pub fn nf(&self, v: &ModVec) -> ModVec {
        self.rel_gb().normal_form(self.ring().ctx(), v)
    }

    pub fn is_zero_elem(&self, v: &ModVec) -> bool {
        self.nf(v).is_zero()
    }

    /// Every generator lies in the relation submodule.
    pub fn is_zero_module(&self) -> bool {
        let ring = self.ring();
        (0..self.gens()).all(|i| self.is_zero_elem(&ModVec::unit(i as u32, ring.ambient())))
    }

    /// Standard module terms `(component, monomial)`, ascending; errors
    /// when the module is not a finite-dimensional k-space.
    pub fn std_terms(&self) -> Result<Vec<(u32, Monomial)>, AlgError> {
        let ring = self.ring();
        let ring_lt: Vec<&Monomial> = ring
            .groebner()
            .elems
            .iter()
            .map(|g| g.lead_monomial().unwrap())
            .collect();
        let gb = self.rel_gb();
        let mut out = Vec::new();
        for c in 0..self.gens() as u32 {
            let mut lt: Vec<Monomial> = ring_lt.iter().map(|m| (*m).clone()).collect();
            lt.extend(
                gb.lead_terms()
                    .filter(|(comp, _)| *comp == c)
                    .map(|(_, m)| m.clone()),
            );
            let nvars = ring.nvars();
            // cone test: every variable needs a pure power
            let mut bound = alloc::vec![0u32; nvars];
            let zero_comp = lt.iter().any(|l| l.is_one());
            if !zero_comp {
                for v in 0..nvars {
                    let mut found = false;
                    for l in &lt {
                        if l.exps()[v] > 0
                            && l.exps().iter().enumerate().all(|(u, &e)| u == v || e == 0)
                        {
                            bound[v] = bound[v].max(l.exps()[v]);
                            found = true;
                        }
                    }
                    if !found {
                        return Err(AlgError::NotArtinian);
                    }
                }
                let mut cur = alloc::vec![0u32; nvars];
                loop {
                    let m = Monomial::from_exps(cur.clone());
                    if !lt.iter().any(|l| l.divides(&m)) {
                        out.push((c, m));
                    }
                    if !advance_box(&mut cur, &bound) {
                        break;
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            self.ring()
                .ambient()
                .order
                .cmp(&a.1, &b.1)
                .then(a.0.cmp(&b.0))
        });
        Ok(out)
    }

    pub fn k_dim(&self) -> Dim {
        match self.std_terms() {
            Ok(t) => Dim::Finite(t.len() as u64),
            Err(_) => Dim::Infinite,
        }
    }

    /// Counts standard terms of (shifted) weighted degree `d`.
    pub fn hilbert_value(&self, d: i64) -> Result<u64, AlgError> {
        let ring = self.ring();
        let w = ring
            .weights()
            .ok_or_else(|| AlgError::Unsupported("ring is not graded".to_string()))?;
        let shifts = self
            .gen_degrees()
            .ok_or_else(|| AlgError::Unsupported("module is not graded".to_string()))?;
        let ring_lt: Vec<&Monomial> = ring
            .groebner()
            .elems
            .iter()
            .map(|g| g.lead_monomial().unwrap())
            .collect();
        let gb = self.rel_gb();
        let mut count = 0;
        for c in 0..self.gens() as u32 {
            let mut lt: Vec<&Monomial> = ring_lt.clone();
            let own: Vec<&Monomial> = gb
                .lead_terms()
                .filter(|(comp, _)| *comp == c)
                .map(|(_, m)| m)
                .collect();
            lt.extend(own);
            count += count_degree_slice(&lt, w, ring.nvars(), d - shifts[c as usize]);
        }
        Ok(count)
    }

    pub fn render_elem(&self, v: &ModVec) -> String {
        let ring = self.ring();
        let polys = v.to_polys(self.gens());
        let mut parts = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            if !p.is_zero() {
                parts.push(alloc::format!("({})*g{}", ring.render(p), i));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Odometer over the box `[0, bound_v)` per coordinate; false on wrap.
pub(crate) fn advance_box(cur: &mut [u32], bound: &[u32]) -> bool {
    for v in 0..cur.len() {
        cur[v] += 1;
        if cur[v] < bound[v].max(1) {
            return true;
        }
        cur[v] = 0;
    }
    false
}

fn count_degree_slice(lt: &[&Monomial], weights: &[i64], nvars: usize, d: i64) -> u64 {
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

/// Columns generating the syzygies of the columns of `m` over the ring
/// (ring relations folded in): `m * result = 0` and the columns generate
/// every relation.
pub fn syzygy_matrix(ring: &Arc<PresentedRing>, m: &RMatrix) -> RMatrix {
    let cols = m.cols_as_modvecs(ring);
    let run = gb_with_syzygies(ring.ctx(), m.nrows.max(1) as u32, &cols);
    let syz: Vec<ModVec> = run.syzygies;
    let order: Vec<usize> = sorted_by_lead(ring, &syz);
    let kept = prune_generators(ring.ctx(), cols.len() as u32, &syz, &order);
    let chosen: Vec<ModVec> = kept.into_iter().map(|i| syz[i].clone()).collect();
    RMatrix::from_modvecs(ring, cols.len(), &chosen)
}

/// Deterministic processing order: by degree when the vectors are
/// homogeneous, then by lead term, then by index.
pub(crate) fn sorted_by_lead(ring: &Arc<PresentedRing>, vecs: &[ModVec]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vecs.len()).collect();
    let ambient = ring.ambient();
    idx.sort_by(|&a, &b| {
        let (va, vb) = (&vecs[a], &vecs[b]);
        let da = va.lead().map(|t| t.mon.total_degree()).unwrap_or(0);
        let db = vb.lead().map(|t| t.mon.total_degree()).unwrap_or(0);
        da.cmp(&db)
            .then_with(|| match (va.lead(), vb.lead()) {
                (Some(x), Some(y)) => ambient
                    .order
                    .cmp(&x.mon, &y.mon)
                    .then(x.comp.cmp(&y.comp)),
                _ => core::cmp::Ordering::Equal,
            })
            .then(a.cmp(&b))
    });
    idx
}

/// A homomorphism of presented modules, given on generators and validated:
/// the matrix maps every source relation into the target relation module.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: PresentedModule,
    pub target: PresentedModule,
    pub matrix: RMatrix,
}

impl ModuleMap {
    pub fn new(
        source: PresentedModule,
        target: PresentedModule,
        matrix: RMatrix,
    ) -> Result<ModuleMap, AlgError> {
        source.same_ring(&target)?;
        if matrix.nrows != target.gens() || matrix.ncols() != source.gens() {
            return Err(AlgError::MixedAmbients(
                "map matrix shape does not match the modules".to_string(),
            ));
        }
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn identity(m: &PresentedModule) -> ModuleMap {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: RMatrix::identity(m.ring(), m.gens()),
        }
    }

    pub fn validate(&self) -> Result<(), AlgError> {
        let ring = self.source.ring();
        for j in 0..self.source.rels().ncols() {
            let mut col = alloc::vec![Polynomial::zero(); self.source.gens()];
            for (i, p) in &self.source.rels().cols[j] {
                col[*i] = p.clone();
            }
            let image = self.matrix.apply(ring, &col);
            let image_vec = ModVec::from_polys(ring.ambient(), &image);
            if !self.target.is_zero_elem(&image_vec) {
                return Err(AlgError::Unsupported(alloc::format!(
                    "matrix does not respect source relation column {j}"
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, v: &ModVec) -> ModVec {
        let ring = self.source.ring();
        let polys = v.to_polys(self.source.gens());
        let image = self.matrix.apply(ring, &polys);
        self.target.nf(&ModVec::from_polys(ring.ambient(), &image))
    }

    /// `other . self` (apply `self` first).
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap, AlgError> {
        let matrix = other.matrix.mul(self.source.ring(), &self.matrix);
        ModuleMap::new(self.source.clone(), other.target.clone(), matrix)
    }
}

/// Generators of `{v in R^src : matrix * v lies in <target_rels>}`,
/// i.e. the preimage of the target relations under a matrix.
pub fn kernel_gens(
    ring: &Arc<PresentedRing>,
    matrix: &RMatrix,
    target_rels: &RMatrix,
) -> Vec<ModVec> {
    let ncols = matrix.ncols();
    let mut gens = matrix.cols_as_modvecs(ring);
    gens.extend(target_rels.cols_as_modvecs(ring));
    let run = gb_with_syzygies(ring.ctx(), matrix.nrows.max(1) as u32, &gens);
    let mut out = Vec::new();
    for s in run.syzygies {
        let head = s.truncate_components(ncols as u32);
        if !head.is_zero() {
            out.push(head);
        }
    }
    out
}

/// Presents `(<gens> + <modulo>)/<modulo>` on the images of `gens` inside
/// the free module of the given rank.
pub fn subquotient_module(
    ring: &Arc<PresentedRing>,
    ambient_rank: usize,
    gens: &[ModVec],
    modulo: &[ModVec],
    ambient_shifts: Option<&[i64]>,
) -> PresentedModule {
    let mut all: Vec<ModVec> = gens.to_vec();
    all.extend(modulo.iter().cloned());
    let run = gb_with_syzygies(ring.ctx(), ambient_rank.max(1) as u32, &all);
    let mut rel_vecs = Vec::new();
    for s in run.syzygies {
        let head = s.truncate_components(gens.len() as u32);
        if !head.is_zero() {
            rel_vecs.push(head);
        }
    }
    let order = sorted_by_lead(ring, &rel_vecs);
    let kept = prune_generators(ring.ctx(), gens.len() as u32, &rel_vecs, &order);
    let chosen: Vec<ModVec> = kept.into_iter().map(|i| rel_vecs[i].clone()).collect();
    let rels = RMatrix::from_modvecs(ring, gens.len(), &chosen);
    let degrees = match (ring.weights(), ambient_shifts) {
        (Some(w), Some(shifts)) => {
            let mut d = Vec::with_capacity(gens.len());
            let mut ok = true;
            for g in gens {
                match g.homogeneous_degree(w, shifts) {
                    Some(deg) => d.push(deg),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                Some(d)
            } else {
                None
            }
        }
        _ => None,
    };
    PresentedModule::new(ring.clone(), gens.len(), rels, degrees).expect("subquotient")
}

/// The kernel of a module map, as a presented module together with the
/// inclusion-witness vectors (one ambient vector per kernel generator).
pub fn kernel_module(map: &ModuleMap) -> (PresentedModule, Vec<ModVec>) {
    let ring = map.source.ring();
    let raw = kernel_gens(ring, &map.matrix, map.target.rels());
    let order = sorted_by_lead(ring, &raw);
    let kept = prune_generators(ring.ctx(), map.source.gens().max(1) as u32, &raw, &order);
    let gens: Vec<ModVec> = kept.into_iter().map(|i| raw[i].clone()).collect();
    let module = subquotient_module(
        ring,
        map.source.gens(),
        &gens,
        &map.source.rels().cols_as_modvecs(ring),
        map.source.gen_degrees(),
    );
    (module, gens)
}

/// The cokernel of a map: target generators modulo image and relations.
pub fn cokernel_module(map: &ModuleMap) -> PresentedModule {
    let ring = map.source.ring();
    let rels = map.matrix.hstack(map.target.rels());
    PresentedModule::new(
        ring.clone(),
        map.target.gens(),
        rels,
        map.target.gen_degrees().map(|d| d.to_vec()),
    )
    .expect("cokernel")
}

/// PASS iff kernel and cokernel both vanish; FAIL carries the witness.
pub fn verify_map_iso(map: &ModuleMap) -> CheckReport {
    let ring = map.source.ring();
    let mut report = CheckReport::new("map.iso", Verdict::Pass);

    // kernel
    let raw = kernel_gens(ring, &map.matrix, map.target.rels());
    let mut kernel_witness = None;
    for v in &raw {
        if !map.source.is_zero_elem(v) {
            kernel_witness = Some(v.clone());
            break;
        }
    }
    match &kernel_witness {
        None => report.push_sub("kernel", Verdict::Pass, None),
        Some(v) => report.push_sub(
            "kernel",
            Verdict::Fail,
            Some(Witness::Element {
                label: "kernel".to_string(),
                value: map.source.render_elem(v),
            }),
        ),
    }

    // cokernel
    let mut image_and_rels = map.matrix.cols_as_modvecs(ring);
    image_and_rels.extend(map.target.rels().cols_as_modvecs(ring));
    let gb = module_gb(ring.ctx(), map.target.gens().max(1) as u32, &image_and_rels);
    let mut coker_witness = None;
    for i in 0..map.target.gens() {
        let e = ModVec::unit(i as u32, ring.ambient());
        if !gb.contains(ring.ctx(), &e) {
            coker_witness = Some(i);
            break;
        }
    }
    match coker_witness {
        None => report.push_sub("cokernel", Verdict::Pass, None),
        Some(i) => report.push_sub(
            "cokernel",
            Verdict::Fail,
            Some(Witness::Index {
                label: "cokernel_generator".to_string(),
                value: i as u32,
            }),
        ),
    }

    if kernel_witness.is_some() || coker_witness.is_some() {
        report.verdict = Verdict::Fail;
        if let (Dim::Finite(a), Dim::Finite(b)) = (map.source.k_dim(), map.target.k_dim()) {
            report.witness = Some(Witness::DimPair {
                left_label: "dim_source".to_string(),
                left: alloc::format!("{a}"),
                right_label: "dim_target".to_string(),
                right: alloc::format!("{b}"),
            });
        } else if let Some(v) = kernel_witness {
            report.witness = Some(Witness::Element {
                label: "kernel".to_string(),
                value: map.source.render_elem(&v),
            });
        }
    }
    report
}

/// Generators of the annihilator ideal of a module.
pub fn annihilator(m: &PresentedModule) -> Vec<Polynomial> {
    let ring = m.ring();
    let n = m.gens();
    if n == 0 {
        return alloc::vec![ring.one()];
    }
    // the map R -> M^n sending 1 to (e_1, ..., e_n)
    let mut col = Vec::new();
    for i in 0..n {
        col.push((i * n + i, ring.one()));
    }
    let matrix = RMatrix {
        nrows: n * n,
        cols: alloc::vec![col],
    };
    let rels = m.rels().block_diagonal(n);
    let raw = kernel_gens(ring, &matrix, &rels);
    let order = sorted_by_lead(ring, &raw);
    let kept = prune_generators(ring.ctx(), 1, &raw, &order);
    let mut out: Vec<Polynomial> = kept
        .into_iter()
        .map(|i| {
            let p = ring.nf(&raw[i].component(0));
            ring.ambient().monic(&p)
        })
        .collect();
    out.sort_by(|a, b| match (a.lead_monomial(), b.lead_monomial()) {
        (Some(x), Some(y)) => ring.ambient().order.cmp(y, x),
        _ => core::cmp::Ordering::Equal,
    });
    out
}

/// Index convention for pair-indexed generators: `(outer, inner)` with
/// inner block size `n` maps to `outer * n + inner`.
pub fn pair_index(outer: usize, inner: usize, n: usize) -> usize {
    outer * n + inner
}

/// The module `Hom(M, N)` presented on explicit homomorphism generators.
pub struct HomModule {
    pub module: PresentedModule,
    pub source: PresentedModule,
    pub target: PresentedModule,
    /// Flattened generator vectors in `R^(m*n)`, component `l*n + i`
    /// holding the coefficient of target generator `i` in the image of
    /// source generator `l`.
    pub gen_vecs: Vec<ModVec>,
    /// Homotopy directions (matrices with columns in the target relations).
    trivial: Vec<ModVec>,
    lifter: OnceBox<Lifter>,
}

impl HomModule {
    /// The matrix of the `idx`-th generator as a map.
    pub fn decode(&self, idx: usize) -> ModuleMap {
        let mat = self.vec_to_matrix(&self.gen_vecs[idx]);
        ModuleMap::new(self.source.clone(), self.target.clone(), mat)
            .expect("hom generators are validated maps")
    }

    pub fn vec_to_matrix(&self, v: &ModVec) -> RMatrix {
        let (m, n) = (self.source.gens(), self.target.gens());
        let flat = v.to_polys(m * n);
        let mut cols = Vec::with_capacity(m);
        for l in 0..m {
            let mut col = Vec::new();
            for i in 0..n {
                let p = &flat[pair_index(l, i, n)];
                if !p.is_zero() {
                    col.push((i, p.clone()));
                }
            }
            cols.push(col);
        }
        RMatrix { nrows: n, cols }
    }

    pub fn matrix_to_vec(&self, mat: &RMatrix) -> ModVec {
        let ring = self.source.ring();
        let (m, n) = (self.source.gens(), self.target.gens());
        let mut flat = alloc::vec![Polynomial::zero(); m * n];
        for l in 0..m {
            for (i, p) in &mat.cols[l] {
                flat[pair_index(l, *i, n)] = p.clone();
            }
        }
        ModVec::from_polys(ring.ambient(), &flat)
    }

    /// Expresses a concrete homomorphism (as a matrix on generators) in
    /// the Hom generators; `None` if it is not a valid homomorphism image.
    pub fn express(&self, mat: &RMatrix) -> Option<Vec<Polynomial>> {
        let ring = self.source.ring();
        let v = self.matrix_to_vec(mat);
        let lifter = self.lifter.get_or_init(|| {
            let mut gens = self.gen_vecs.clone();
            gens.extend(self.trivial.iter().cloned());
            alloc::boxed::Box::new(Lifter::new(
                ring.ctx(),
                (self.source.gens() * self.target.gens()).max(1) as u32,
                &gens,
            ))
        });
        let coeffs = lifter.lift(ring.ctx(), &v)?;
        Some(coeffs[..self.gen_vecs.len()].to_vec())
    }
}

/// Computes `Hom(M, N)` by the double-syzygy construction.
pub fn hom_module(m: &PresentedModule, n_mod: &PresentedModule) -> Result<HomModule, AlgError> {
    m.same_ring(n_mod)?;
    let ring = m.ring().clone();
    let (mg, a) = (m.gens(), m.rels().ncols());
    let (ng, b) = (n_mod.gens(), n_mod.rels().ncols());

    // homotopy directions: target relation column t placed in source slot l
    let mut trivial = Vec::new();
    for l in 0..mg {
        for t in 0..b {
            let mut flat = alloc::vec![Polynomial::zero(); mg * ng];
            for (i, p) in &n_mod.rels().cols[t] {
                flat[pair_index(l, *i, ng)] = p.clone();
            }
            trivial.push(ModVec::from_polys(ring.ambient(), &flat));
        }
    }

    let gen_vecs: Vec<ModVec> = if a == 0 {
        // M free: Hom(R^m, N) = N^m on the obvious generators
        let mut units = Vec::with_capacity(mg * ng);
        for l in 0..mg {
            for i in 0..ng {
                let mut flat = alloc::vec![Polynomial::zero(); mg * ng];
                flat[pair_index(l, i, ng)] = ring.one();
                units.push(ModVec::from_polys(ring.ambient(), &flat));
            }
        }
        units
    } else {
        // unknowns v_(l,i); conditions: for each source relation column j
        // and target slot i: sum_l A[l,j] v_(l,i) lies in im(B).
        let mut psi_cols = Vec::with_capacity(mg * ng);
        for l in 0..mg {
            for i in 0..ng {
                let mut col = Vec::new();
                for j in 0..a {
                    if let Some(p) = m.rels().entry(l, j) {
                        col.push((pair_index(j, i, ng), p.clone()));
                    }
                }
                col.sort_by_key(|(r, _)| *r);
                psi_cols.push(col);
            }
        }
        let psi = RMatrix {
            nrows: a * ng,
            cols: psi_cols,
        };
        let modulo = n_mod.rels().block_diagonal(a);
        let raw = kernel_gens(&ring, &psi, &modulo);
        let order = sorted_by_lead(&ring, &raw);
        let kept = prune_generators(ring.ctx(), (mg * ng).max(1) as u32, &raw, &order);
        kept.into_iter().map(|i| raw[i].clone()).collect()
    };

    // hom generator degrees live in the shift space deg(N_i) - deg(M_l)
    let shifts: Option<Vec<i64>> = match (m.gen_degrees(), n_mod.gen_degrees()) {
        (Some(dm), Some(dn)) => {
            let mut s = alloc::vec![0i64; mg * ng];
            for l in 0..mg {
                for i in 0..ng {
                    s[pair_index(l, i, ng)] = dn[i] - dm[l];
                }
            }
            Some(s)
        }
        _ => None,
    };

    let module = subquotient_module(&ring, mg * ng, &gen_vecs, &trivial, shifts.as_deref());
    Ok(HomModule {
        module,
        source: m.clone(),
        target: n_mod.clone(),
        gen_vecs,
        trivial,
        lifter: OnceBox::new(),
    })
}

/// The tensor product `M (x) N` with generator `(l, i) -> l * ng + i`.
pub struct TensorModule {
    pub module: PresentedModule,
    pub left: PresentedModule,
    pub right: PresentedModule,
}

pub fn tensor_module(m: &PresentedModule, n_mod: &PresentedModule) -> Result<TensorModule, AlgError> {
    m.same_ring(n_mod)?;
    let ring = m.ring().clone();
    let (mg, ng) = (m.gens(), n_mod.gens());
    let a_part = m.rels().tensor_identity(ng);
    let b_part = n_mod.rels().block_diagonal(mg);
    let rels = a_part.hstack(&b_part);
    let degrees = match (m.gen_degrees(), n_mod.gen_degrees()) {
        (Some(dm), Some(dn)) => {
            let mut d = alloc::vec![0i64; mg * ng];
            for l in 0..mg {
                for i in 0..ng {
                    d[pair_index(l, i, ng)] = dm[l] + dn[i];
                }
            }
            Some(d)
        }
        _ => None,
    };
    let module = PresentedModule::new(ring, mg * ng, rels, degrees)?;
    Ok(TensorModule {
        module,
        left: m.clone(),
        right: n_mod.clone(),
    })
}

/// The socle `(0 :_M m)` dimension: kernel of multiplication by every
/// ring variable.
pub fn socle_dim(m: &PresentedModule) -> Result<u64, AlgError> {
    let ring = m.ring();
    let nv = ring.nvars();
    let n = m.gens();
    if nv == 0 {
        return match m.k_dim() {
            Dim::Finite(d) => Ok(d),
            Dim::Infinite => Err(AlgError::NotArtinian),
        };
    }
    let mut cols = Vec::with_capacity(n);
    for l in 0..n {
        let mut col = Vec::new();
        for v in 0..nv {
            col.push((pair_index(v, l, n), ring.var(v)));
        }
        col.retain(|(_, p)| !p.is_zero());
        cols.push(col);
    }
    let matrix = RMatrix {
        nrows: nv * n,
        cols,
    };
    let map_target_rels = m.rels().block_diagonal(nv);
    let raw = kernel_gens(ring, &matrix, &map_target_rels);
    let order = sorted_by_lead(ring, &raw);
    let kept = prune_generators(ring.ctx(), n.max(1) as u32, &raw, &order);
    let gens: Vec<ModVec> = kept.into_iter().map(|i| raw[i].clone()).collect();
    let socle = subquotient_module(
        ring,
        n,
        &gens,
        &m.rels().cols_as_modvecs(ring),
        m.gen_degrees(),
    );
    match socle.k_dim() {
        Dim::Finite(d) => Ok(d),
        Dim::Infinite => Err(AlgError::NotArtinian),
    }
}

/// Data of a finite-dimensional module: ordered k-basis and the action
/// matrix of each ring variable (column `s` expands `x_v * b_s`).
pub struct FiniteModuleData {
    pub basis: Vec<(u32, Monomial)>,
    pub actions: Vec<Vec<Vec<crate::field::FieldElem>>>,
}

pub fn finite_module_data(m: &PresentedModule) -> Result<FiniteModuleData, AlgError> {
    let ring = m.ring();
    let basis = m.std_terms()?;
    let nv = ring.nvars();
    let dim = basis.len();
    let index_of = |c: u32, mon: &Monomial| -> usize {
        basis
            .iter()
            .position(|(bc, bm)| *bc == c && bm == mon)
            .expect("normal form lands in the standard basis")
    };
    let mut actions = Vec::with_capacity(nv);
    for v in 0..nv {
        let xv = Monomial::var(nv, v);
        let mut mat = alloc::vec![alloc::vec![ring.field().zero(); dim]; dim];
        for (s, (c, mon)) in basis.iter().enumerate() {
            let shifted = ModVec {
                terms: alloc::vec![crate::modgb::ModTerm {
                    comp: *c,
                    mon: mon.mul(&xv),
                    coeff: ring.field().one(),
                }],
            };
            let nf = m.nf(&shifted);
            for t in &nf.terms {
                mat[index_of(t.comp, &t.mon)][s] = t.coeff.clone();
            }
        }
        actions.push(mat);
    }
    Ok(FiniteModuleData { basis, actions })
}

/// The Matlis dual `Hom_k(M, k)` of a finite-dimensional module over an
/// Artinian presented ring, with its transpose module structure. The
/// generators are the dual basis functionals of `std_terms`.
pub fn matlis_dual(m: &PresentedModule) -> Result<PresentedModule, AlgError> {
    let ring = m.ring();
    if !ring.is_artinian() {
        return Err(AlgError::NotArtinian);
    }
    let data = finite_module_data(m)?;
    let dim = data.basis.len();
    let nv = ring.nvars();
    let mut cols = Vec::new();
    for v in 0..nv {
        for s in 0..dim {
            // x_v e_s - sum_t action[s][t] e_t  (transpose action)
            let mut dense = alloc::vec![Polynomial::zero(); dim];
            dense[s] = ring.var(v);
            for t in 0..dim {
                let c = &data.actions[v][s][t];
                if !c.is_zero() {
                    dense[t] = ring
                        .ambient()
                        .sub(&dense[t], &ring.ambient().constant(c.clone()));
                }
            }
            let col: Vec<(usize, Polynomial)> = dense
                .into_iter()
                .enumerate()
                .filter_map(|(i, p)| {
                    let p = ring.nf(&p);
                    if p.is_zero() {
                        None
                    } else {
                        Some((i, p))
                    }
                })
                .collect();
            if !col.is_empty() {
                cols.push(col);
            }
        }
    }
    let rels = RMatrix { nrows: dim, cols };
    PresentedModule::new(ring.clone(), dim, rels, None)
}

/// The evaluation map `R -> matlis_dual(R)` sending 1 to the functional
/// dual to the top standard monomial. An isomorphism exactly when the
/// Artinian ring is self-injective.
pub fn trace_map(ring: &Arc<PresentedRing>) -> Result<ModuleMap, AlgError> {
    let free = PresentedModule::free(ring.clone(), 1);
    let dual = matlis_dual(&free)?;
    let data = finite_module_data(&free)?;
    if data.basis.is_empty() {
        return Err(AlgError::Unsupported("zero ring has no trace".to_string()));
    }
    let top = data.basis.len() - 1;
    let col = alloc::vec![(top, ring.one())];
    let matrix = RMatrix {
        nrows: dual.gens(),
        cols: alloc::vec![col],
    };
    ModuleMap::new(free, dual, matrix)
}

// ---------------------------------------------------------------------------
// Restriction of scalars along a ring map, via the graph ring.
// ---------------------------------------------------------------------------

/// Restriction of scalars along `map: A -> B`.
///
/// Internally builds the graph ring `T = k[B-vars, A-vars]/(J_B, x_v -
/// phi_v)` with a block order eliminating the B-variables. The canonical
/// A-module generators of `B` are the pure-B standard monomials of `T`;
/// any element re-expresses by grouping its `T`-normal form.
pub struct Restriction {
    pub map: RingMap,
    graph: Arc<PresentedRing>,
    nb: usize,
    na: usize,
    /// Canonical generator monomials, in B's variables.
    pub gen_monomials: Vec<Monomial>,
}

impl Restriction {
    pub fn new(map: &RingMap) -> Result<Restriction, AlgError> {
        let a = &map.domain;
        let b = &map.codomain;
        if a.field() != b.field() {
            return Err(AlgError::MixedAmbients("field mismatch".to_string()));
        }
        let (nb, na) = (b.nvars(), a.nvars());
        let mut names: Vec<String> = b.ambient().var_names.clone();
        for an in &a.ambient().var_names {
            let mut candidate = alloc::format!("{an}_a");
            while names.contains(&candidate) {
                candidate.push('_');
            }
            names.push(candidate);
        }
        let rest = shift_order(&a.ambient().order, nb);
        let order = MonomialOrder::block((0..nb).collect(), rest);
        let ambient = crate::poly::PolyRing::new(b.field(), names.clone(), order.clone())?;
        let mut rels: Vec<Polynomial> = b
            .relations()
            .iter()
            .map(|p| pad_poly(&ambient, p, 0))
            .collect();
        for v in 0..na {
            let img = pad_poly(&ambient, &map.images()[v], 0);
            let xv = ambient.var(nb + v);
            rels.push(ambient.sub(&xv, &img));
        }
        let weights = match (a.weights(), b.weights()) {
            (Some(wa), Some(wb)) if map.is_graded() => {
                let mut w = wb.to_vec();
                w.extend_from_slice(wa);
                Some(w)
            }
            _ => None,
        };
        let graph = Arc::new(PresentedRing::new(
            b.field(),
            names,
            rels,
            order,
            weights,
        )?);

        // canonical generators: pure-B standard monomials of T
        let leads: Vec<&Monomial> = graph
            .groebner()
            .elems
            .iter()
            .map(|g| g.lead_monomial().unwrap())
            .collect();
        let pure_b: Vec<Monomial> = leads
            .iter()
            .filter(|l| l.exps()[nb..].iter().all(|&e| e == 0))
            .map(|l| (*l).clone())
            .collect();
        // every B variable needs a pure power among the pure-B leads
        for v in 0..nb {
            let has = pure_b.iter().any(|l| {
                l.exps()[v] > 0 && l.exps().iter().enumerate().all(|(u, &e)| u == v || e == 0)
            });
            if !has {
                return Err(AlgError::RestrictionGenerators(
                    "codomain is not visibly module-finite over the domain".to_string(),
                ));
            }
        }
        let mut bound = alloc::vec![0u32; nb];
        for v in 0..nb {
            for l in &pure_b {
                if l.exps()[v] > 0 && l.exps().iter().enumerate().all(|(u, &e)| u == v || e == 0) {
                    bound[v] = bound[v].max(l.exps()[v]);
                }
            }
        }
        let mut gen_monomials = Vec::new();
        let mut cur = alloc::vec![0u32; nb];
        'outer: loop {
            let mut full = cur.clone();
            full.extend(core::iter::repeat(0).take(na));
            let m = Monomial::from_exps(full);
            if !pure_b.iter().any(|l| l.divides(&m)) {
                gen_monomials.push(Monomial::from_exps(cur.clone()));
            }
            let mut v = 0;
            loop {
                if v == nb {
                    break 'outer;
                }
                cur[v] += 1;
                if cur[v] < bound[v].max(1) {
                    break;
                }
                cur[v] = 0;
                v += 1;
            }
        }
        gen_monomials.sort_by(|x, y| b.ambient().order.cmp(x, y));
        Ok(Restriction {
            map: map.clone(),
            graph,
            nb,
            na,
            gen_monomials,
        })
    }

    pub fn gen_count(&self) -> usize {
        self.gen_monomials.len()
    }

    /// Generators as codomain elements (for display and validation).
    pub fn gen_elems(&self) -> Vec<Polynomial> {
        self.gen_monomials
            .iter()
            .map(|m| {
                self.map.codomain.nf(&Polynomial {
                    terms: alloc::vec![(m.clone(), self.map.codomain.field().one())],
                })
            })
            .collect()
    }

    /// Validates user-supplied generators: they must contain every
    /// canonical generator (as codomain elements). Returns, for each
    /// canonical generator, its index in the supplied list.
    pub fn validate_gens(&self, supplied: &[Polynomial]) -> Result<Vec<usize>, AlgError> {
        let b = &self.map.codomain;
        let mut positions = Vec::new();
        for g in self.gen_elems() {
            match supplied.iter().position(|s| b.eq_elems(s, &g)) {
                Some(i) => positions.push(i),
                None => {
                    return Err(AlgError::RestrictionGenerators(alloc::format!(
                        "supplied generators do not contain {}",
                        b.render(&g)
                    )))
                }
            }
        }
        Ok(positions)
    }

    /// Coefficients over A expressing a codomain element on the canonical
    /// generators: `b = sum_t phi(a_t) * g_t`.
    pub fn express(&self, b_elem: &Polynomial) -> Vec<Polynomial> {
        let padded = pad_poly(self.graph.ambient(), b_elem, 0);
        let nf = self.graph.nf(&padded);
        let mut out = alloc::vec![Polynomial::zero(); self.gen_monomials.len()];
        let a = &self.map.domain;
        for (mon, coeff) in &nf.terms {
            let b_part = Monomial::from_exps(mon.exps()[..self.nb].to_vec());
            let a_part = Monomial::from_exps(mon.exps()[self.nb..].to_vec());
            let t = self
                .gen_monomials
                .iter()
                .position(|g| *g == b_part)
                .expect("normal form is supported on standard monomials");
            let term = Polynomial {
                terms: alloc::vec![(a_part, coeff.clone())],
            };
            out[t] = a.ambient().add(&out[t], &term);
        }
        out.iter().map(|p| a.nf(p)).collect()
    }

    /// Restricts a module over B to a module over A on the generators
    /// `g_t * m_i`, index `(t, i) -> t * n + i`.
    pub fn restrict(&self, m: &PresentedModule) -> Result<PresentedModule, AlgError> {
        if m.ring().as_ref() != self.map.codomain.as_ref() {
            return Err(AlgError::MixedAmbients(
                "module does not live over the codomain".to_string(),
            ));
        }
        let a = &self.map.domain;
        let n = m.gens();
        let big = (self.gen_count() * n).max(1);

        // V-family and the padded module relations, over the graph ring.
        let mut gens: Vec<ModVec> = Vec::with_capacity(self.gen_count() * n);
        for t in 0..self.gen_count() {
            for i in 0..n {
                let mut full = self.gen_monomials[t].exps().to_vec();
                full.extend(core::iter::repeat(0).take(self.na));
                gens.push(ModVec {
                    terms: alloc::vec![crate::modgb::ModTerm {
                        comp: i as u32,
                        mon: Monomial::from_exps(full),
                        coeff: a.field().one(),
                    }],
                });
            }
        }
        // The elimination must see coefficients that vanish under the ring
        // map (they act as zero but are nonzero in A), so it runs over the
        // plain polynomial ambient with the graph ideal as explicit
        // relation columns rather than folded into the arithmetic.
        let plain = crate::modgb::RingCtx {
            ring: self.graph.ambient(),
            ring_gb: &[],
        };
        let mut all = gens.clone();
        for j in 0..m.rels().ncols() {
            let mut polys = alloc::vec![Polynomial::zero(); n];
            for (i, p) in &m.rels().cols[j] {
                polys[*i] = pad_poly(self.graph.ambient(), p, 0);
            }
            all.push(ModVec::from_polys(self.graph.ambient(), &polys));
        }
        for g in &self.graph.groebner().elems {
            for i in 0..n {
                all.push(ModVec::from_poly(i as u32, g));
            }
        }
        let run = gb_with_syzygies(plain, n.max(1) as u32, &all);
        let mut u_gens = Vec::new();
        for s in run.syzygies {
            let head = s.truncate_components(gens.len() as u32);
            if !head.is_zero() {
                u_gens.push(head);
            }
        }
        // Module elimination: pure-A elements of the Groebner basis of U.
        let ugb = module_gb(plain, big as u32, &u_gens);
        let mut rel_vecs: Vec<ModVec> = Vec::new();
        for e in &ugb.entries {
            if e.vec
                .terms
                .iter()
                .all(|t| t.mon.exps()[..self.nb].iter().all(|&x| x == 0))
            {
                // strip to A variables
                let terms = e
                    .vec
                    .terms
                    .iter()
                    .map(|t| crate::modgb::ModTerm {
                        comp: t.comp,
                        mon: Monomial::from_exps(t.mon.exps()[self.nb..].to_vec()),
                        coeff: t.coeff.clone(),
                    })
                    .collect();
                rel_vecs.push(ModVec { terms });
            }
        }
        let rel_vecs: Vec<ModVec> = rel_vecs
            .iter()
            .map(|v| ModVec::from_polys(a.ambient(), &v.to_polys(big)))
            .collect();
        let order = sorted_by_lead(a, &rel_vecs);
        let kept = prune_generators(a.ctx(), big as u32, &rel_vecs, &order);
        let chosen: Vec<ModVec> = kept.into_iter().map(|i| rel_vecs[i].clone()).collect();
        let rels = RMatrix::from_modvecs(a, self.gen_count() * n, &chosen);

        let degrees = match (a.weights(), self.map.codomain.weights(), m.gen_degrees()) {
            (Some(_), Some(wb), Some(dm)) if self.map.is_graded() => {
                let mut d = alloc::vec![0i64; self.gen_count() * n];
                for t in 0..self.gen_count() {
                    for i in 0..n {
                        d[pair_index(t, i, n)] =
                            self.gen_monomials[t].weighted_degree(wb) + dm[i];
                    }
                }
                Some(d)
            }
            _ => None,
        };
        PresentedModule::new(a.clone(), self.gen_count() * n, rels, degrees)
    }
}

fn shift_order(order: &MonomialOrder, offset: usize) -> MonomialOrder {
    match order {
        MonomialOrder::Simple { kind, prec } => MonomialOrder::Simple {
            kind: *kind,
            prec: prec.iter().map(|v| v + offset).collect(),
        },
        MonomialOrder::Block { first, rest } => MonomialOrder::Block {
            first: first.iter().map(|v| v + offset).collect(),
            rest: alloc::boxed::Box::new(shift_order(rest, offset)),
        },
    }
}

/// Re-embeds a polynomial into a larger ambient: variable `v` becomes
/// `v + offset` in a ring with `total` variables. The result is term-sorted
/// by whatever order canonicalizes it later (`PolyRing::from_terms` at the
/// use sites), so this only rewrites exponent vectors.
pub(crate) fn pad_terms(p: &Polynomial, offset: usize, total: usize) -> Vec<(Monomial, crate::field::FieldElem)> {
    p.terms
        .iter()
        .map(|(m, c)| {
            let mut exps = alloc::vec![0u32; total];
            for (v, &e) in m.exps().iter().enumerate() {
                exps[v + offset] = e;
            }
            (Monomial::from_exps(exps), c.clone())
        })
        .collect()
}

/// Re-embeds and canonicalizes under the target ambient's order.
pub(crate) fn pad_poly(
    target: &crate::poly::PolyRing,
    p: &Polynomial,
    offset: usize,
) -> Polynomial {
    target.from_terms(pad_terms(p, offset, target.nvars()))
}
