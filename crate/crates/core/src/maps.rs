//! The explicit natural maps: homothety, biduality, the Foxby-class maps
//! gamma and xi, and the Hom/tensor evaluation maps over a module-finite
//! ring extension.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::AlgError;
use crate::matrix::RMatrix;
use crate::module::{
    hom_module, pair_index, tensor_module, HomModule, ModuleMap, PresentedModule, Restriction,
};
use crate::poly::Polynomial;
use crate::ring::RingMap;

/// Which canonical map to realize.
pub enum CanonicalMapKind<'a> {
    /// `chi: R -> Hom(C, C)`, `r -> (c -> r c)`.
    Homothety { c: &'a PresentedModule },
    /// `delta: M -> Hom(Hom(M, C), C)`, evaluation.
    Biduality {
        m: &'a PresentedModule,
        c: &'a PresentedModule,
    },
    /// `gamma: M -> Hom(C, C (x) M)`, `m -> (c -> c (x) m)`.
    Gamma {
        m: &'a PresentedModule,
        c: &'a PresentedModule,
    },
    /// `xi: C (x) Hom(C, M) -> M`, `c (x) psi -> psi(c)`.
    Xi {
        m: &'a PresentedModule,
        c: &'a PresentedModule,
    },
    /// Hom evaluation `S (x) Hom(M, N) -> Hom(Hom(S, M), N)` along a
    /// module-finite `f: R -> S` (`S` restricted to `R`).
    Theta {
        f: &'a RingMap,
        m: &'a PresentedModule,
        n: &'a PresentedModule,
    },
    /// Tensor evaluation `Hom(S, M) (x) N -> Hom(S, M (x) N)`.
    Omega {
        f: &'a RingMap,
        m: &'a PresentedModule,
        n: &'a PresentedModule,
    },
}

fn express_column(
    hom: &HomModule,
    functional: &RMatrix,
) -> Result<Vec<Polynomial>, AlgError> {
    hom.express(functional).ok_or_else(|| {
        AlgError::Unsupported("canonical image does not lie in the Hom generators".to_string())
    })
}

fn matrix_from_columns(nrows: usize, columns: Vec<Vec<Polynomial>>) -> RMatrix {
    let cols = columns
        .into_iter()
        .map(|dense| {
            dense
                .into_iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .collect()
        })
        .collect();
    RMatrix { nrows, cols }
}

/// Realizes the requested canonical map on generators, validated.
pub fn canonical_map(kind: CanonicalMapKind<'_>) -> Result<ModuleMap, AlgError> {
    match kind {
        CanonicalMapKind::Homothety { c } => homothety(c),
        CanonicalMapKind::Biduality { m, c } => biduality(m, c),
        CanonicalMapKind::Gamma { m, c } => gamma(m, c),
        CanonicalMapKind::Xi { m, c } => xi(m, c),
        CanonicalMapKind::Theta { f, m, n } => theta(f, m, n),
        CanonicalMapKind::Omega { f, m, n } => omega(f, m, n),
    }
}

/// `chi^R_C`: the free rank-one module onto `Hom(C, C)` via the identity.
pub fn homothety(c: &PresentedModule) -> Result<ModuleMap, AlgError> {
    let ring = c.ring().clone();
    let hom = hom_module(c, c)?;
    let id = RMatrix::identity(&ring, c.gens());
    let coeffs = express_column(&hom, &id)?;
    let matrix = matrix_from_columns(hom.module.gens(), alloc::vec![coeffs]);
    let free = PresentedModule::free(ring, 1);
    ModuleMap::new(free, hom.module.clone(), matrix)
}

/// `delta^C_M : M -> Hom(Hom(M, C), C)`.
pub fn biduality(m: &PresentedModule, c: &PresentedModule) -> Result<ModuleMap, AlgError> {
    let dual = hom_module(m, c)?;
    let bidual = hom_module(&dual.module, c)?;
    let mut columns = Vec::with_capacity(m.gens());
    for l in 0..m.gens() {
        // the functional "evaluate at generator l"
        let mut dense_cols = Vec::with_capacity(dual.module.gens());
        for v in 0..dual.module.gens() {
            let psi = dual.vec_to_matrix(&dual.gen_vecs[v]);
            let mut col = alloc::vec![Polynomial::zero(); c.gens()];
            for (i, p) in &psi.cols[l] {
                col[*i] = p.clone();
            }
            dense_cols.push(col);
        }
        let functional = matrix_from_columns(c.gens(), dense_cols);
        columns.push(express_column(&bidual, &functional)?);
    }
    let matrix = matrix_from_columns(bidual.module.gens(), columns);
    ModuleMap::new(m.clone(), bidual.module.clone(), matrix)
}

/// `gamma^C_M : M -> Hom(C, C (x) M)`.
pub fn gamma(m: &PresentedModule, c: &PresentedModule) -> Result<ModuleMap, AlgError> {
    let ring = m.ring().clone();
    let t = tensor_module(c, m)?;
    let hom = hom_module(c, &t.module)?;
    let mg = m.gens();
    let mut columns = Vec::with_capacity(mg);
    for l in 0..mg {
        let mut dense_cols = Vec::with_capacity(c.gens());
        for u in 0..c.gens() {
            let mut col = alloc::vec![Polynomial::zero(); t.module.gens()];
            col[pair_index(u, l, mg)] = ring.one();
            dense_cols.push(col);
        }
        let functional = matrix_from_columns(t.module.gens(), dense_cols);
        columns.push(express_column(&hom, &functional)?);
    }
    let matrix = matrix_from_columns(hom.module.gens(), columns);
    ModuleMap::new(m.clone(), hom.module.clone(), matrix)
}

/// `xi^C_M : C (x) Hom(C, M) -> M`.
pub fn xi(m: &PresentedModule, c: &PresentedModule) -> Result<ModuleMap, AlgError> {
    let hom = hom_module(c, m)?;
    let t = tensor_module(c, &hom.module)?;
    let h = hom.module.gens();
    let mut columns = Vec::with_capacity(t.module.gens());
    for u in 0..c.gens() {
        for v in 0..h {
            debug_assert_eq!(pair_index(u, v, h), columns.len());
            let psi = hom.vec_to_matrix(&hom.gen_vecs[v]);
            let mut col = alloc::vec![Polynomial::zero(); m.gens()];
            for (i, p) in &psi.cols[u] {
                col[*i] = p.clone();
            }
            columns.push(col);
        }
    }
    let matrix = matrix_from_columns(m.gens(), columns);
    ModuleMap::new(t.module.clone(), m.clone(), matrix)
}

/// `Theta_{S,M,N} : S (x) Hom(M, N) -> Hom(Hom(S, M), N)`.
pub fn theta(
    f: &RingMap,
    m: &PresentedModule,
    n: &PresentedModule,
) -> Result<ModuleMap, AlgError> {
    let restriction = Restriction::new(f)?;
    let s_free = PresentedModule::free(f.codomain.clone(), 1);
    let s_r = restriction.restrict(&s_free)?;
    let hom_mn = hom_module(m, n)?;
    let hom_sm = hom_module(&s_r, m)?;
    let h2 = hom_module(&hom_sm.module, n)?;
    let t = tensor_module(&s_r, &hom_mn.module)?;
    let h = hom_mn.module.gens();
    let ring = m.ring();

    let mut columns = Vec::with_capacity(t.module.gens());
    for g_t in 0..s_r.gens() {
        for v in 0..h {
            debug_assert_eq!(pair_index(g_t, v, h), columns.len());
            let psi = hom_mn.vec_to_matrix(&hom_mn.gen_vecs[v]);
            let mut dense_cols = Vec::with_capacity(hom_sm.module.gens());
            for w in 0..hom_sm.module.gens() {
                let phi = hom_sm.vec_to_matrix(&hom_sm.gen_vecs[w]);
                let mut at = alloc::vec![Polynomial::zero(); m.gens()];
                for (i, p) in &phi.cols[g_t] {
                    at[*i] = p.clone();
                }
                dense_cols.push(psi.apply(ring, &at));
            }
            let functional = matrix_from_columns(n.gens(), dense_cols);
            columns.push(express_column(&h2, &functional)?);
        }
    }
    let matrix = matrix_from_columns(h2.module.gens(), columns);
    ModuleMap::new(t.module.clone(), h2.module.clone(), matrix)
}

/// `Omega_{S,M,N} : Hom(S, M) (x) N -> Hom(S, M (x) N)`.
pub fn omega(
    f: &RingMap,
    m: &PresentedModule,
    n: &PresentedModule,
) -> Result<ModuleMap, AlgError> {
    let restriction = Restriction::new(f)?;
    let s_free = PresentedModule::free(f.codomain.clone(), 1);
    let s_r = restriction.restrict(&s_free)?;
    let hom_sm = hom_module(&s_r, m)?;
    let t = tensor_module(&hom_sm.module, n)?;
    let tmn = tensor_module(m, n)?;
    let h3 = hom_module(&s_r, &tmn.module)?;
    let ng = n.gens();

    let mut columns = Vec::with_capacity(t.module.gens());
    for w in 0..hom_sm.module.gens() {
        let phi = hom_sm.vec_to_matrix(&hom_sm.gen_vecs[w]);
        for i in 0..ng {
            debug_assert_eq!(pair_index(w, i, ng), columns.len());
            let mut dense_cols = Vec::with_capacity(s_r.gens());
            for g_t in 0..s_r.gens() {
                let mut col = alloc::vec![Polynomial::zero(); tmn.module.gens()];
                for (l, p) in &phi.cols[g_t] {
                    col[pair_index(*l, i, ng)] = p.clone();
                }
                dense_cols.push(col);
            }
            let functional = matrix_from_columns(tmn.module.gens(), dense_cols);
            columns.push(express_column(&h3, &functional)?);
        }
    }
    let matrix = matrix_from_columns(h3.module.gens(), columns);
    ModuleMap::new(t.module.clone(), h3.module.clone(), matrix)
}

/// Post-composition `Hom(X, N) -> Hom(X, N')` induced by `post: N -> N'`.
pub fn hom_induced(
    hom: &HomModule,
    post: &ModuleMap,
    target_hom: &HomModule,
) -> Result<ModuleMap, AlgError> {
    let ring = hom.source.ring();
    let mut columns = Vec::with_capacity(hom.module.gens());
    for v in 0..hom.module.gens() {
        let composed = post.matrix.mul(ring, &hom.vec_to_matrix(&hom.gen_vecs[v]));
        columns.push(express_column(target_hom, &composed)?);
    }
    let matrix = matrix_from_columns(target_hom.module.gens(), columns);
    ModuleMap::new(hom.module.clone(), target_hom.module.clone(), matrix)
}

/// The cancellation isomorphism `C (x) R -> C` for the rank-one free module.
pub fn tensor_cancel_right(
    t: &crate::module::TensorModule,
) -> Result<ModuleMap, AlgError> {
    if t.right.gens() != 1 || t.right.rels().ncols() != 0 {
        return Err(AlgError::Unsupported(
            "cancellation needs a rank-one free right factor".to_string(),
        ));
    }
    let c = t.left.clone();
    let matrix = RMatrix::identity(c.ring(), c.gens());
    ModuleMap::new(t.module.clone(), c, matrix)
}
