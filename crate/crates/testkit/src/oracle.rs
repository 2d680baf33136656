//! Brute-force homological algebra over Artinian algebras.
//!
//! A module is a finite-dimensional k-space with one action matrix per
//! ring variable. Resolutions are built by minimal generators of kernels
//! (graded Nakayama via dense kernels), and Ext/Tor dimensions fall out of
//! rank computations. Nothing here touches the Groebner engine beyond
//! extracting the initial multiplication data.

use fphom_core::field::{Field, FieldElem};
use fphom_core::module::{finite_module_data, PresentedModule};
use fphom_core::monomial::Monomial;
use fphom_core::ring::PresentedRing;
use std::sync::Arc;

use crate::dense::{in_span, nullspace, rank, row_space, DenseMatrix};

/// A finite-dimensional representation of a presented ring's module.
#[derive(Clone)]
pub struct ModuleRep {
    pub field: Field,
    pub dim: usize,
    /// One action matrix per ring variable.
    pub actions: Vec<DenseMatrix>,
}

impl ModuleRep {
    pub fn from_module(m: &PresentedModule) -> ModuleRep {
        let data = finite_module_data(m).expect("oracle needs a finite-dimensional module");
        let field = m.ring().field();
        let dim = data.basis.len();
        let actions = data
            .actions
            .iter()
            .map(|a| {
                let mut mat = DenseMatrix::zero(field, dim, dim);
                for (i, row) in a.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        mat.rows[i][j] = c.clone();
                    }
                }
                mat
            })
            .collect();
        ModuleRep {
            field,
            dim,
            actions,
        }
    }

    /// Action of a monomial (product of the variable actions).
    pub fn monomial_action(&self, mon: &Monomial) -> DenseMatrix {
        let mut acc = DenseMatrix::identity(self.field, self.dim);
        for (v, &e) in mon.exps().iter().enumerate() {
            for _ in 0..e {
                acc = self.actions[v].mul(&acc);
            }
        }
        acc
    }
}

/// The ring itself as a module (regular representation), with its k-basis.
pub struct AlgebraData {
    pub ring: Arc<PresentedRing>,
    pub rep: ModuleRep,
    pub basis: Vec<Monomial>,
}

impl AlgebraData {
    pub fn new(ring: &Arc<PresentedRing>) -> AlgebraData {
        let free = PresentedModule::free(ring.clone(), 1);
        let rep = ModuleRep::from_module(&free);
        let basis = ring.std_monomials().expect("Artinian ring");
        AlgebraData {
            ring: ring.clone(),
            rep,
            basis,
        }
    }

    /// Action of an algebra element (written on the monomial basis) on a
    /// representation.
    pub fn element_action(&self, rep: &ModuleRep, coeffs: &[FieldElem]) -> DenseMatrix {
        let mut acc = DenseMatrix::zero(rep.field, rep.dim, rep.dim);
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = self.basis_action(rep, d).scale_add(c, &acc);
        }
        acc
    }

    fn basis_action(&self, rep: &ModuleRep, d: usize) -> DenseMatrix {
        rep.monomial_action(&self.basis[d])
    }
}

/// `dim_k Hom_R(M, N)`: matrices commuting with every variable action.
pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    let field = m.field;
    let unknowns = n.dim * m.dim; // phi[i][j], column-major by j
    let mut rows = Vec::new();
    for v in 0..m.actions.len() {
        let x = &m.actions[v];
        let y = &n.actions[v];
        // condition: phi . x = y . phi
        for i in 0..n.dim {
            for j in 0..m.dim {
                let mut row = vec![field.zero(); unknowns];
                // (phi . x)[i][j] = sum_k phi[i][k] x[k][j]
                for k in 0..m.dim {
                    row[i * m.dim + k] = row[i * m.dim + k].add(&x.rows[k][j]);
                }
                // -(y . phi)[i][j] = -sum_k y[i][k] phi[k][j]
                for k in 0..n.dim {
                    row[k * m.dim + j] = row[k * m.dim + j].sub(&y.rows[i][k]);
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(&rows, unknowns, field)
}

/// `dim_k (M (x)_R N)`.
pub fn tensor_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    let field = m.field;
    let total = m.dim * n.dim;
    let mut rows = Vec::new();
    for v in 0..m.actions.len() {
        let x = &m.actions[v];
        let y = &n.actions[v];
        for a in 0..m.dim {
            for b in 0..n.dim {
                // (x a) (x) b - a (x) (y b)
                let mut row = vec![field.zero(); total];
                for i in 0..m.dim {
                    if !x.rows[i][a].is_zero() {
                        row[i * n.dim + b] = row[i * n.dim + b].add(&x.rows[i][a]);
                    }
                }
                for j in 0..n.dim {
                    if !y.rows[j][b].is_zero() {
                        row[a * n.dim + j] = row[a * n.dim + j].sub(&y.rows[j][b]);
                    }
                }
                rows.push(row);
            }
        }
    }
    total - rank(&rows, total, field)
}

/// A minimal free resolution of a representation over the algebra, with
/// differentials stored as matrices of algebra elements (coefficient
/// vectors over the monomial basis).
pub struct OracleResolution {
    pub ranks: Vec<usize>,
    /// `diffs[i]` presents `d_{i+1}: F_{i+1} -> F_i` as entries
    /// `entry[s][t]` (row s, column t) = algebra coefficient vector.
    pub diffs: Vec<Vec<Vec<Vec<FieldElem>>>>,
}

/// Minimal generators of an A-stable subspace: vectors spanning a
/// complement of `m * V` inside `V`.
fn minimal_generators(
    rep_actions: &[DenseMatrix],
    v_basis: &[Vec<FieldElem>],
    field: Field,
) -> Vec<Vec<FieldElem>> {
    if v_basis.is_empty() {
        return Vec::new();
    }
    let ncols = v_basis[0].len();
    let mut mv: Vec<Vec<FieldElem>> = Vec::new();
    for x in rep_actions {
        for v in v_basis {
            mv.push(x.apply(v));
        }
    }
    let mv = row_space(&mv, ncols, field);
    let mut kept: Vec<Vec<FieldElem>> = Vec::new();
    for v in v_basis {
        let mut span = mv.clone();
        span.extend(kept.iter().cloned());
        if !in_span(&span, v, field) {
            kept.push(v.clone());
        }
    }
    kept
}

/// Builds the minimal resolution of `m_rep` to `length` differentials.
pub fn oracle_resolution(
    alg: &AlgebraData,
    m_rep: &ModuleRep,
    length: usize,
) -> OracleResolution {
    let field = m_rep.field;
    let d = alg.rep.dim; // dim of the algebra
    // current target: a representation W plus a distinguished subspace V
    // (the cycles to cover); initially W = M, V = all of M.
    let mut w_rep = m_rep.clone();
    let mut v_basis: Vec<Vec<FieldElem>> = (0..m_rep.dim)
        .map(|i| {
            let mut v = vec![field.zero(); m_rep.dim];
            v[i] = field.one();
            v
        })
        .collect();
    let mut ranks = vec![];
    let mut diffs = vec![];
    let mut gens_prev: Option<Vec<Vec<FieldElem>>> = None;

    for _step in 0..=length {
        let gens = minimal_generators(&w_rep.actions, &v_basis, field);
        let b = gens.len();
        if let Some(prev) = &gens_prev {
            // express the new generators over the previous free module:
            // each gen is a vector in F_prev's coordinate space
            // (slot s, algebra basis element mu_d) -> index s * d + mu_d.
            let prev_rank = prev.len();
            let mut entries = vec![vec![vec![field.zero(); d]; b]; prev_rank];
            for (t, g) in gens.iter().enumerate() {
                for s in 0..prev_rank {
                    for mu in 0..d {
                        entries[s][t][mu] = g[s * d + mu].clone();
                    }
                }
            }
            diffs.push(entries);
        }
        ranks.push(b);
        if b == 0 {
            break;
        }
        // F = A^b with the regular action; pi: F -> W sends mu_d e_s to
        // mu_d . g_s. The next cycles are ker(pi).
        let f_dim = b * d;
        let mut f_actions = Vec::with_capacity(w_rep.actions.len());
        for v in 0..w_rep.actions.len() {
            let mut act = DenseMatrix::zero(field, f_dim, f_dim);
            for s in 0..b {
                for i in 0..d {
                    for j in 0..d {
                        act.rows[s * d + i][s * d + j] = alg.rep.actions[v].rows[i][j].clone();
                    }
                }
            }
            f_actions.push(act);
        }
        let mut pi = DenseMatrix::zero(field, w_rep.dim, f_dim);
        for (s, g) in gens.iter().enumerate() {
            for mu in 0..d {
                let action = w_rep.monomial_action(&alg.basis[mu]);
                let img = action.apply(g);
                for (i, c) in img.iter().enumerate() {
                    pi.rows[i][s * d + mu] = c.clone();
                }
            }
        }
        let kernel = nullspace(&pi);
        gens_prev = Some(gens);
        w_rep = ModuleRep {
            field,
            dim: f_dim,
            actions: f_actions,
        };
        v_basis = kernel;
        if diffs.len() >= length {
            break;
        }
    }
    OracleResolution { ranks, diffs }
}

/// `dim_k Ext^i_R(M, N)` via the oracle resolution of `M`.
pub fn ext_dim(alg: &AlgebraData, m_rep: &ModuleRep, n_rep: &ModuleRep, i: usize) -> usize {
    if i == 0 {
        return hom_dim(m_rep, n_rep);
    }
    let res = oracle_resolution(alg, m_rep, i + 1);
    let b = |j: usize| -> usize {
        if j < res.ranks.len() {
            res.ranks[j]
        } else {
            0
        }
    };
    // Hom(F_j, N) = N^{b_j}; delta_j: Hom(F_{j-1}, N) -> Hom(F_j, N)
    let delta = |j: usize| -> DenseMatrix {
        // columns index Hom(F_{j-1}, N), rows index Hom(F_j, N)
        let (rows_n, cols_n) = (b(j) * n_rep.dim, b(j.saturating_sub(1)) * n_rep.dim);
        let mut out = DenseMatrix::zero(n_rep.field, rows_n, cols_n);
        if j == 0 || j > res.diffs.len() {
            return out;
        }
        let entries = &res.diffs[j - 1];
        for t in 0..b(j) {
            for s in 0..b(j - 1) {
                let act = alg.element_action(n_rep, &entries[s][t]);
                for r in 0..n_rep.dim {
                    for c in 0..n_rep.dim {
                        out.rows[t * n_rep.dim + r][s * n_rep.dim + c] = act.rows[r][c].clone();
                    }
                }
            }
        }
        out
    };
    let dnext = delta(i + 1);
    let dprev = delta(i);
    let cycles = if b(i) == 0 {
        0
    } else {
        b(i) * n_rep.dim - rank(&dnext.rows, dnext.ncols, n_rep.field)
    };
    let boundaries = rank(&dprev.rows, dprev.ncols, n_rep.field);
    cycles - boundaries
}

/// `dim_k Tor_i^R(M, N)` via the oracle resolution of `M`.
pub fn tor_dim(alg: &AlgebraData, m_rep: &ModuleRep, n_rep: &ModuleRep, i: usize) -> usize {
    if i == 0 {
        return tensor_dim(m_rep, n_rep);
    }
    let res = oracle_resolution(alg, m_rep, i + 1);
    let b = |j: usize| -> usize {
        if j < res.ranks.len() {
            res.ranks[j]
        } else {
            0
        }
    };
    // F_j (x) N = N^{b_j}; v_j: N^{b_j} -> N^{b_{j-1}}
    let v = |j: usize| -> DenseMatrix {
        let (rows_n, cols_n) = (b(j.saturating_sub(1)) * n_rep.dim, b(j) * n_rep.dim);
        let mut out = DenseMatrix::zero(n_rep.field, rows_n, cols_n);
        if j == 0 || j > res.diffs.len() {
            return out;
        }
        let entries = &res.diffs[j - 1];
        for t in 0..b(j) {
            for s in 0..b(j - 1) {
                let act = alg.element_action(n_rep, &entries[s][t]);
                for r in 0..n_rep.dim {
                    for c in 0..n_rep.dim {
                        out.rows[s * n_rep.dim + r][t * n_rep.dim + c] = act.rows[r][c].clone();
                    }
                }
            }
        }
        out
    };
    let vi = v(i);
    let vnext = v(i + 1);
    let cycles = if b(i) == 0 {
        0
    } else {
        b(i) * n_rep.dim - rank(&vi.rows, vi.ncols, n_rep.field)
    };
    let boundaries = rank(&vnext.rows, vnext.ncols, n_rep.field);
    cycles - boundaries
}
