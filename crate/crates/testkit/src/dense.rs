//! Dense exact linear algebra over a coefficient field.

use fphom_core::field::{Field, FieldElem};

/// Row-major dense matrix of field elements.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    pub field: Field,
    pub rows: Vec<Vec<FieldElem>>,
    pub ncols: usize,
}

impl DenseMatrix {
    pub fn zero(field: Field, nrows: usize, ncols: usize) -> DenseMatrix {
        DenseMatrix {
            field,
            rows: vec![vec![field.zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(field: Field, n: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zero(field, n, n);
        for i in 0..n {
            m.rows[i][i] = field.one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ncols, other.nrows());
        let mut out = DenseMatrix::zero(self.field, self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let p = self.rows[i][k].mul(&other.rows[k][j]);
                    out.rows[i][j] = out.rows[i][j].add(&p);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows())
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.ncols {
                    acc = acc.add(&self.rows[i][j].mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn scale_add(&self, c: &FieldElem, other: &DenseMatrix) -> DenseMatrix {
        let mut out = other.clone();
        for i in 0..self.nrows() {
            for j in 0..self.ncols {
                out.rows[i][j] = out.rows[i][j].add(&self.rows[i][j].mul(c));
            }
        }
        out
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut DenseMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.ncols {
        if row == m.nrows() {
            break;
        }
        let Some(p) = (row..m.nrows()).find(|&r| !m.rows[r][col].is_zero()) else {
            continue;
        };
        m.rows.swap(row, p);
        let inv = m.rows[row][col].inv().unwrap();
        for j in 0..m.ncols {
            m.rows[row][j] = m.rows[row][j].mul(&inv);
        }
        for r in 0..m.nrows() {
            if r != row && !m.rows[r][col].is_zero() {
                let c = m.rows[r][col].clone();
                for j in 0..m.ncols {
                    let s = m.rows[row][j].mul(&c);
                    m.rows[r][j] = m.rows[r][j].sub(&s);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<FieldElem>], ncols: usize, field: Field) -> usize {
    let mut m = DenseMatrix {
        field,
        rows: rows.to_vec(),
        ncols,
    };
    rref(&mut m).len()
}

/// A basis of the right nullspace `{v : M v = 0}`.
pub fn nullspace(m: &DenseMatrix) -> Vec<Vec<FieldElem>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; m.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    for free in 0..m.ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![m.field.zero(); m.ncols];
        v[free] = m.field.one();
        for (col, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                v[col] = work.rows[*r][free].neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Row space basis (echelon rows) of the span of the given vectors.
pub fn row_space(rows: &[Vec<FieldElem>], ncols: usize, field: Field) -> Vec<Vec<FieldElem>> {
    let mut m = DenseMatrix {
        field,
        rows: rows.to_vec(),
        ncols,
    };
    let pivots = rref(&mut m);
    m.rows.truncate(pivots.len());
    m.rows
}

/// Membership of `v` in the span of `rows`.
pub fn in_span(rows: &[Vec<FieldElem>], v: &[FieldElem], field: Field) -> bool {
    let base = rank(rows, v.len(), field);
    let mut all = rows.to_vec();
    all.push(v.to_vec());
    rank(&all, v.len(), field) == base
}
