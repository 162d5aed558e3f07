//! Dense exact linear algebra over the rationals.
//!
//! Just enough for the rest of the crate: reduced row echelon form, rank,
//! and a canonical nullspace basis. Pivoting is deterministic (first nonzero
//! entry in column order), so equal row spaces always produce identical
//! reduced forms.

use num::traits::{One, Zero};

use crate::scalar::Scalar;

/// A matrix stored as rows of equal length. Rows may be empty only if the
/// matrix has no rows at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl QMatrix {
    pub fn new(cols: usize) -> Self {
        QMatrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        QMatrix { cols, rows }
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduced row echelon form with zero rows dropped, together with the
    /// pivot column of each remaining row.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(src) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next_row, src);
            let inv = rows[next_row][col].recip();
            for c in col..self.cols {
                let v = &rows[next_row][c] * &inv;
                rows[next_row][c] = v;
            }
            for r in 0..rows.len() {
                if r != next_row && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in col..self.cols {
                        let v = &rows[r][c] - &(&factor * &rows[next_row][c]);
                        rows[r][c] = v;
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == rows.len() {
                break;
            }
        }
        rows.truncate(next_row);
        (QMatrix { cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right nullspace: one vector per free column,
    /// derived from the reduced form.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (reduced, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (row, &p) in reduced.rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    vec[p] = -row[free].clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// True when the row spaces coincide; both sides are compared through
    /// their canonical reduced forms.
    pub fn same_row_space(&self, other: &QMatrix) -> bool {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        self.rref().0 == other.rref().0
    }
}
