//! Dense matrices over an exact [`Field`] with Gauss-Jordan elimination.

use super::field::Field;
use super::ExactError;

/// A dense `rows x cols` matrix over the field context `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(ExactError::LengthMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Mat {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let mut acc = f.zero();
                for (e, x) in row.iter().zip(v) {
                    if !f.is_zero(e) {
                        acc = f.add(&acc, &f.mul(e, x));
                    }
                }
                acc
            })
            .collect())
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is non-zero");
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || f.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), &f.mul(&factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Exact nullity and a kernel basis: one vector per free column, with
    /// a one in the free position and the negated pivot-row entries above.
    pub fn nullspace(&self) -> (usize, Vec<Vec<F::Elem>>) {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                let e = m.get(r, free);
                if !f.is_zero(e) {
                    vec[pc] = f.neg(e);
                }
            }
            basis.push(vec);
        }
        debug_assert_eq!(basis.len(), self.cols - pivots.len());
        (basis.len(), basis)
    }
}

/// Rank of a set of row vectors over the given field.
pub(crate) fn rank_of_rows<F: Field>(field: F, rows: &[Vec<F::Elem>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Mat::from_rows(field, rows.to_vec())
        .expect("row lengths agree")
        .rank()
}
