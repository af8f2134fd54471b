//! Dense matrices over GF(2^ℓ): rank, square solves, and a cached left
//! inverse for overdetermined full-column-rank systems.

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, f: &FieldContext, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElem::ZERO, |acc, (&a, &b)| acc + f.mul(a, b))
            })
            .collect()
    }

    /// Rank by forward elimination; the matrix is consumed as scratch.
    pub fn rank(mut self, f: &FieldContext) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(rank, p);
            let inv = f.inv(self.get(rank, col)).expect("pivot is nonzero");
            self.scale_row(f, rank, inv, col);
            for r in rank + 1..self.rows {
                let factor = self.get(r, col);
                if !factor.is_zero() {
                    self.axpy_row(f, r, rank, factor, col);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `self · x = rhs` for square nonsingular `self`.
    pub fn solve(&self, f: &FieldContext, rhs: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let n = self.rows;
        if self.cols != n || rhs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        let mut aug = Matrix::zeros(n, n + 1);
        for (r, &b) in rhs.iter().enumerate() {
            aug.data[r * (n + 1)..r * (n + 1) + n].copy_from_slice(self.row(r));
            aug.set(r, n, b);
        }
        aug.gauss_jordan(f, n)?;
        Ok((0..n).map(|r| aug.get(r, n)).collect())
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self, f: &FieldContext) -> Result<Matrix> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::SingularSystem);
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            aug.data[r * 2 * n..r * 2 * n + n].copy_from_slice(self.row(r));
            aug.set(r, n + r, FieldElem::ONE);
        }
        aug.gauss_jordan(f, n)?;
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            inv.data[r * n..(r + 1) * n].copy_from_slice(&aug.row(r)[n..]);
        }
        Ok(inv)
    }

    /// Reduces the leading `n × n` block to the identity.
    fn gauss_jordan(&mut self, f: &FieldContext, n: usize) -> Result<()> {
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !self.get(r, col).is_zero())
                .ok_or(Error::SingularSystem)?;
            self.swap_rows(col, p);
            let inv = f.inv(self.get(col, col))?;
            self.scale_row(f, col, inv, col);
            for r in 0..n {
                let factor = self.get(r, col);
                if r != col && !factor.is_zero() {
                    self.axpy_row(f, r, col, factor, col);
                }
            }
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, f: &FieldContext, r: usize, k: FieldElem, from: usize) {
        for c in from..self.cols {
            let i = r * self.cols + c;
            self.data[i] = f.mul(self.data[i], k);
        }
    }

    /// `row[dst] += k · row[src]` over columns `from..`.
    fn axpy_row(&mut self, f: &FieldContext, dst: usize, src: usize, k: FieldElem, from: usize) {
        let cols = self.cols;
        for c in from..cols {
            let s = self.data[src * cols + c];
            if !s.is_zero() {
                self.data[dst * cols + c] += f.mul(k, s);
            }
        }
    }
}

/// Left inverse of a tall matrix with independent columns, built from a
/// maximal set of independent rows.
#[derive(Clone, Debug)]
pub struct LeftInverse {
    pivot_rows: Vec<usize>,
    inverse: Matrix,
}

impl LeftInverse {
    /// Fails with `SingularSystem` if the columns are dependent.
    pub fn new(f: &FieldContext, m: &Matrix) -> Result<Self> {
        let k = m.cols();
        // Greedy row basis: keep each row that is independent of those kept so far.
        let mut basis: Vec<(usize, Vec<FieldElem>)> = Vec::with_capacity(k);
        let mut pivot_rows = Vec::with_capacity(k);
        for r in 0..m.rows() {
            if pivot_rows.len() == k {
                break;
            }
            let mut v = m.row(r).to_vec();
            for (pc, b) in &basis {
                let factor = v[*pc];
                if !factor.is_zero() {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x += f.mul(factor, y);
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let inv = f.inv(v[pc])?;
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                basis.push((pc, v));
                pivot_rows.push(r);
            }
        }
        if pivot_rows.len() < k {
            return Err(Error::SingularSystem);
        }
        let sub = Matrix::from_rows(pivot_rows.iter().map(|&r| m.row(r).to_vec()).collect());
        Ok(LeftInverse {
            inverse: sub.inverse(f)?,
            pivot_rows,
        })
    }

    /// The unique `x` with `m · x = y` restricted to the pivot rows.
    pub fn apply(&self, f: &FieldContext, y: &[FieldElem]) -> Vec<FieldElem> {
        let picked: Vec<_> = self.pivot_rows.iter().map(|&r| y[r]).collect();
        self.inverse.mul_vec(f, &picked)
    }
}
