//! Free resolutions by iterated syzygies, and Ext/Tor through them.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgError;
use crate::matrix::RMatrix;
use crate::modgb::{gb_with_syzygies, module_gb, prune_generators, ModVec};
use crate::module::{
    hom_module, kernel_gens, subquotient_module, tensor_module, PresentedModule,
};
use crate::ring::PresentedRing;

/// Default length cap used by checkers when nothing deeper is requested.
pub const DEFAULT_RESOLUTION_CAP: usize = 6;

/// A free resolution `... -> F_2 -> F_1 -> F_0 -> M -> 0` built from
/// syzygies, so it is exact at every computed spot by construction.
/// Differentials are pruned generating sets of the syzygy modules
/// (correct, close to minimal, not guaranteed minimal).
pub struct FreeResolution {
    module: PresentedModule,
    diffs: Vec<RMatrix>,
    shifts: Vec<Option<Vec<i64>>>,
    terminated: Option<usize>,
}

impl FreeResolution {
    pub fn new(module: &PresentedModule) -> FreeResolution {
        let ring = module.ring().clone();
        let cols = module.rels().cols_as_modvecs(&ring);
        let order = sort_for_prune(&ring, &cols, module.gen_degrees());
        let kept = prune_generators(ring.ctx(), module.gens().max(1) as u32, &cols, &order);
        let chosen: Vec<ModVec> = kept.into_iter().map(|i| cols[i].clone()).collect();
        let d1 = RMatrix::from_modvecs(&ring, module.gens(), &chosen);
        let s1 = column_degrees(&ring, &chosen, module.gen_degrees());
        let terminated = if d1.ncols() == 0 { Some(1) } else { None };
        FreeResolution {
            module: module.clone(),
            shifts: alloc::vec![module.gen_degrees().map(|d| d.to_vec()), s1],
            diffs: alloc::vec![d1],
            terminated,
        }
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        self.module.ring()
    }

    /// Number of computed differentials.
    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            self.module.gens()
        } else {
            self.diffs[i - 1].ncols()
        }
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn diff(&self, i: usize) -> &RMatrix {
        &self.diffs[i - 1]
    }

    pub fn gen_shifts(&self, i: usize) -> Option<&[i64]> {
        self.shifts[i].as_deref()
    }

    /// Index of the first zero differential, if the resolution stopped.
    pub fn terminated_at(&self) -> Option<usize> {
        self.terminated
    }

    pub fn extend_to(&mut self, len: usize) {
        while self.diffs.len() < len {
            if self.terminated.is_some() {
                let prev_rank = self.rank(self.diffs.len());
                self.diffs.push(RMatrix::zero(prev_rank, 0));
                self.shifts.push(Some(Vec::new()).filter(|_| self.ring().weights().is_some()));
                continue;
            }
            let i = self.diffs.len(); // computing d_{i+1}
            let ring = self.ring().clone();
            let cols = self.diffs[i - 1].cols_as_modvecs(&ring);
            let run = gb_with_syzygies(ring.ctx(), self.rank(i - 1).max(1) as u32, &cols);
            let syz = run.syzygies;
            let shifts_i = self.shifts[i].clone();
            let order = sort_for_prune(&ring, &syz, shifts_i.as_deref());
            let kept = prune_generators(ring.ctx(), self.rank(i).max(1) as u32, &syz, &order);
            let chosen: Vec<ModVec> = kept.into_iter().map(|k| syz[k].clone()).collect();
            let d = RMatrix::from_modvecs(&ring, self.rank(i), &chosen);
            let s = column_degrees(&ring, &chosen, shifts_i.as_deref());
            if d.ncols() == 0 {
                self.terminated = Some(i + 1);
            }
            self.diffs.push(d);
            self.shifts.push(s);
        }
    }

    /// The `n`-th syzygy module: `coker(d_{n+1})` presented on the
    /// generators of `F_n` (for `n = 0` this is the module itself).
    pub fn syzygy_module(&mut self, n: usize) -> PresentedModule {
        if n == 0 {
            return self.module.clone();
        }
        self.extend_to(n + 1);
        let ring = self.ring().clone();
        PresentedModule::new(
            ring.clone(),
            self.rank(n),
            self.diffs[n].clone(),
            self.shifts[n].clone(),
        )
        .expect("syzygy module")
    }

    /// `d_i . d_{i+1} = 0` entrywise in the ring.
    pub fn composes_to_zero(&self, i: usize) -> bool {
        let prod = self.diff(i).mul(self.ring(), self.diff(i + 1));
        prod.is_zero()
    }

    /// Independent exactness certificate at spot `i`: the kernel of `d_i`
    /// is contained in the image of `d_{i+1}` and conversely (the latter
    /// holds by `d . d = 0`; both directions are checked).
    pub fn exact_at(&self, i: usize) -> bool {
        let ring = self.ring();
        if !self.composes_to_zero(i) {
            return false;
        }
        let zero_rels = RMatrix::zero(self.rank(i - 1), 0);
        let kernel = kernel_gens(ring, self.diff(i), &zero_rels);
        let image_cols = self.diff(i + 1).cols_as_modvecs(ring);
        let gb = module_gb(ring.ctx(), self.rank(i).max(1) as u32, &image_cols);
        kernel.iter().all(|v| gb.contains(ring.ctx(), v))
    }
}

fn column_degrees(
    ring: &Arc<PresentedRing>,
    cols: &[ModVec],
    ambient_shifts: Option<&[i64]>,
) -> Option<Vec<i64>> {
    let w = ring.weights()?;
    let shifts = ambient_shifts?;
    let mut out = Vec::with_capacity(cols.len());
    for c in cols {
        out.push(c.homogeneous_degree(w, shifts)?);
    }
    Some(out)
}

fn sort_for_prune(
    ring: &Arc<PresentedRing>,
    vecs: &[ModVec],
    shifts: Option<&[i64]>,
) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vecs.len()).collect();
    let w = ring.weights();
    let key = |v: &ModVec| -> i64 {
        match (w, shifts) {
            (Some(w), Some(s)) => v.homogeneous_degree(w, s).unwrap_or_else(|| {
                v.lead().map(|t| t.mon.total_degree() as i64).unwrap_or(0)
            }),
            _ => v.lead().map(|t| t.mon.total_degree() as i64).unwrap_or(0),
        }
    };
    let ambient = ring.ambient();
    idx.sort_by(|&a, &b| {
        key(&vecs[a])
            .cmp(&key(&vecs[b]))
            .then_with(|| match (vecs[a].lead(), vecs[b].lead()) {
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

pub fn free_resolution(module: &PresentedModule, length: usize) -> FreeResolution {
    let mut res = FreeResolution::new(module);
    res.extend_to(length.max(1));
    res
}

/// Relative pruning: indices of `cands` that add something new over
/// `seed` and the previously kept candidates.
fn prune_relative(
    ring: &Arc<PresentedRing>,
    rank: u32,
    seed: &[ModVec],
    cands: &[ModVec],
) -> Vec<usize> {
    use crate::modgb::{GbBuilder, GbOptions};
    let mut b = GbBuilder::new(ring.ctx(), rank, GbOptions::default());
    for s in seed {
        b.add_generator(s.clone());
        b.run();
    }
    let order = crate::module::sorted_by_lead(ring, cands);
    let mut kept = Vec::new();
    for i in order {
        if b.add_generator(cands[i].clone()) {
            b.run();
            kept.push(i);
        }
    }
    kept.sort_unstable();
    kept
}

/// Builds the degree-`i` Ext or Tor data from a resolution of the first
/// argument.
pub struct DerivedSpot {
    /// Kernel generators in the ambient free module of the spot.
    pub cycles: Vec<ModVec>,
    /// Boundaries plus relation columns (the submodule to quotient by).
    pub boundaries: Vec<ModVec>,
    pub ambient_rank: usize,
    pub ambient_shifts: Option<Vec<i64>>,
}

fn hom_spot(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> DerivedSpot {
    debug_assert!(i >= 1);
    res.extend_to(i + 1);
    let ring = res.ring().clone();
    let ng = n.gens();
    let r_i = res.rank(i);
    let r_next = res.rank(i + 1);
    let u_next = res.diff(i + 1).transpose().tensor_identity(ng);
    let u_prev = res.diff(i).transpose().tensor_identity(ng);
    let cycles = kernel_gens(&ring, &u_next, &n.rels().block_diagonal(r_next));
    let mut boundaries = u_prev.cols_as_modvecs(&ring);
    boundaries.extend(n.rels().block_diagonal(r_i).cols_as_modvecs(&ring));
    let ambient_shifts = match (res.gen_shifts(i), n.gen_degrees()) {
        (Some(s), Some(dn)) => {
            let mut v = alloc::vec![0i64; r_i * ng];
            for t in 0..r_i {
                for j in 0..ng {
                    v[t * ng + j] = dn[j] - s[t];
                }
            }
            Some(v)
        }
        _ => None,
    };
    DerivedSpot {
        cycles,
        boundaries,
        ambient_rank: r_i * ng,
        ambient_shifts,
    }
}

fn tensor_spot(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> DerivedSpot {
    debug_assert!(i >= 1);
    res.extend_to(i + 1);
    let ring = res.ring().clone();
    let ng = n.gens();
    let r_prev = res.rank(i - 1);
    let r_i = res.rank(i);
    let v_i = res.diff(i).tensor_identity(ng);
    let v_next = res.diff(i + 1).tensor_identity(ng);
    let cycles = kernel_gens(&ring, &v_i, &n.rels().block_diagonal(r_prev));
    let mut boundaries = v_next.cols_as_modvecs(&ring);
    boundaries.extend(n.rels().block_diagonal(r_i).cols_as_modvecs(&ring));
    let ambient_shifts = match (res.gen_shifts(i), n.gen_degrees()) {
        (Some(s), Some(dn)) => {
            let mut v = alloc::vec![0i64; r_i * ng];
            for t in 0..r_i {
                for j in 0..ng {
                    v[t * ng + j] = dn[j] + s[t];
                }
            }
            Some(v)
        }
        _ => None,
    };
    DerivedSpot {
        cycles,
        boundaries,
        ambient_rank: r_i * ng,
        ambient_shifts,
    }
}

fn spot_module(ring: &Arc<PresentedRing>, spot: DerivedSpot) -> PresentedModule {
    let kept = prune_relative(
        ring,
        spot.ambient_rank.max(1) as u32,
        &spot.boundaries,
        &spot.cycles,
    );
    let gens: Vec<ModVec> = kept.into_iter().map(|i| spot.cycles[i].clone()).collect();
    subquotient_module(
        ring,
        spot.ambient_rank,
        &gens,
        &spot.boundaries,
        spot.ambient_shifts.as_deref(),
    )
}

fn spot_is_zero(ring: &Arc<PresentedRing>, spot: &DerivedSpot) -> bool {
    let gb = module_gb(
        ring.ctx(),
        spot.ambient_rank.max(1) as u32,
        &spot.boundaries,
    );
    spot.cycles.iter().all(|v| gb.contains(ring.ctx(), v))
}

/// `Ext^i(M, N)` computed from a resolution of `M`; `Ext^0 = Hom`.
pub fn ext_module(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> Result<PresentedModule, AlgError> {
    res.module().same_ring(n)?;
    if i == 0 {
        return Ok(hom_module(&res.module().clone(), n)?.module);
    }
    let ring = res.ring().clone();
    let spot = hom_spot(res, n, i);
    Ok(spot_module(&ring, spot))
}

/// Fast vanishing test for `Ext^i(M, N)`, `i >= 1`.
pub fn ext_is_zero(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> Result<bool, AlgError> {
    res.module().same_ring(n)?;
    debug_assert!(i >= 1);
    // a finished resolution vanishes beyond its last nonzero term
    if let Some(t) = res.terminated_at() {
        if i >= t {
            return Ok(true);
        }
    }
    let ring = res.ring().clone();
    let spot = hom_spot(res, n, i);
    Ok(spot_is_zero(&ring, &spot))
}

/// `Tor_i(M, N)` from a resolution of `M`; `Tor_0 = tensor`.
pub fn tor_module(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> Result<PresentedModule, AlgError> {
    res.module().same_ring(n)?;
    if i == 0 {
        return Ok(tensor_module(&res.module().clone(), n)?.module);
    }
    let ring = res.ring().clone();
    let spot = tensor_spot(res, n, i);
    Ok(spot_module(&ring, spot))
}

pub fn tor_is_zero(
    res: &mut FreeResolution,
    n: &PresentedModule,
    i: usize,
) -> Result<bool, AlgError> {
    res.module().same_ring(n)?;
    debug_assert!(i >= 1);
    if let Some(t) = res.terminated_at() {
        if i >= t {
            return Ok(true);
        }
    }
    let ring = res.ring().clone();
    let spot = tensor_spot(res, n, i);
    Ok(spot_is_zero(&ring, &spot))
}
