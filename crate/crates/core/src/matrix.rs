//! Column-sparse matrices over a presented ring.

use alloc::vec::Vec;

use crate::modgb::ModVec;
use crate::poly::Polynomial;
use crate::ring::PresentedRing;

/// A matrix of ring elements, stored as sparse columns `(row, entry)` with
/// rows strictly increasing and entries in normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<(usize, Polynomial)>>,
}

impl RMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> RMatrix {
        RMatrix {
            nrows,
            cols: alloc::vec![Vec::new(); ncols],
        }
    }

    pub fn identity(ring: &PresentedRing, n: usize) -> RMatrix {
        RMatrix {
            nrows: n,
            cols: (0..n).map(|i| alloc::vec![(i, ring.one())]).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn from_dense(ring: &PresentedRing, nrows: usize, dense: Vec<Vec<Polynomial>>) -> RMatrix {
        let cols = dense
            .into_iter()
            .map(|col| {
                debug_assert_eq!(col.len(), nrows);
                col.into_iter()
                    .enumerate()
                    .filter_map(|(i, p)| {
                        let p = ring.nf(&p);
                        if p.is_zero() {
                            None
                        } else {
                            Some((i, p))
                        }
                    })
                    .collect()
            })
            .collect();
        RMatrix { nrows, cols }
    }

    pub fn from_modvecs(ring: &PresentedRing, nrows: usize, vecs: &[ModVec]) -> RMatrix {
        let cols = vecs
            .iter()
            .map(|v| {
                let polys = v.to_polys(nrows);
                polys
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
                    .collect()
            })
            .collect();
        RMatrix { nrows, cols }
    }

    pub fn col_to_modvec(&self, ring: &PresentedRing, j: usize) -> ModVec {
        let mut polys = alloc::vec![Polynomial::zero(); self.nrows];
        for (i, p) in &self.cols[j] {
            polys[*i] = p.clone();
        }
        ModVec::from_polys(ring.ambient(), &polys)
    }

    pub fn cols_as_modvecs(&self, ring: &PresentedRing) -> Vec<ModVec> {
        (0..self.ncols()).map(|j| self.col_to_modvec(ring, j)).collect()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&Polynomial> {
        self.cols[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, p)| p)
    }

    pub fn transpose(&self) -> RMatrix {
        let mut cols: Vec<Vec<(usize, Polynomial)>> = alloc::vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, p) in col {
                cols[*i].push((j, p.clone()));
            }
        }
        for col in cols.iter_mut() {
            col.sort_by_key(|(r, _)| *r);
        }
        RMatrix {
            nrows: self.ncols(),
            cols,
        }
    }

    /// Matrix product `self * other` over the ring.
    pub fn mul(&self, ring: &PresentedRing, other: &RMatrix) -> RMatrix {
        debug_assert_eq!(self.ncols(), other.nrows);
        let mut cols = Vec::with_capacity(other.ncols());
        for ocol in &other.cols {
            let mut dense = alloc::vec![Polynomial::zero(); self.nrows];
            for (k, f) in ocol {
                for (i, g) in &self.cols[*k] {
                    let prod = ring.ambient().mul(g, f);
                    dense[*i] = ring.ambient().add(&dense[*i], &prod);
                }
            }
            cols.push(
                dense
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
                    .collect(),
            );
        }
        RMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    /// Applies the matrix to a column vector of ring elements.
    pub fn apply(&self, ring: &PresentedRing, v: &[Polynomial]) -> Vec<Polynomial> {
        debug_assert_eq!(self.ncols(), v.len());
        let mut out = alloc::vec![Polynomial::zero(); self.nrows];
        for (k, f) in v.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (i, g) in &self.cols[k] {
                let prod = ring.ambient().mul(g, f);
                out[*i] = ring.ambient().add(&out[*i], &prod);
            }
        }
        out.iter().map(|p| ring.nf(p)).collect()
    }

    pub fn hstack(&self, other: &RMatrix) -> RMatrix {
        debug_assert_eq!(self.nrows, other.nrows);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        RMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Entrywise check that all entries are zero in the ring.
    pub fn is_zero_in(&self, ring: &PresentedRing) -> bool {
        self.cols
            .iter()
            .all(|c| c.iter().all(|(_, p)| ring.is_zero_elem(p)))
    }

    /// Block-diagonal sum of `n` copies of `self`.
    pub fn block_diagonal(&self, n: usize) -> RMatrix {
        let mut cols = Vec::with_capacity(self.ncols() * n);
        for b in 0..n {
            for col in &self.cols {
                cols.push(
                    col.iter()
                        .map(|(i, p)| (i + b * self.nrows, p.clone()))
                        .collect(),
                );
            }
        }
        RMatrix {
            nrows: self.nrows * n,
            cols,
        }
    }

    /// Kronecker-style extension of a matrix `M` to `M (x) Id_n` acting on
    /// stacked blocks: block `b` of the source maps by `M` into block `b`
    /// of the target, where blocks have size `n` and are indexed by the
    /// original rows/columns.
    pub fn tensor_identity(&self, n: usize) -> RMatrix {
        let mut cols = Vec::with_capacity(self.ncols() * n);
        for j in 0..self.ncols() {
            for b in 0..n {
                let col: Vec<(usize, Polynomial)> = self.cols[j]
                    .iter()
                    .map(|(i, p)| (i * n + b, p.clone()))
                    .collect();
                cols.push(col);
            }
        }
        let mut m = RMatrix {
            nrows: self.nrows * n,
            cols,
        };
        for col in m.cols.iter_mut() {
            col.sort_by_key(|(r, _)| *r);
        }
        m
    }
}
