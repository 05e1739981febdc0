//! Small dense matrices over a finite field: row reduction, rank, kernels.

use std::fmt;
use std::sync::Arc;

use crate::field::{Elem, FieldTable};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<FieldTable>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Arc<FieldTable>, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: Arc<FieldTable>, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form, choosing pivots among columns in the given
    /// order. Returns the reduced matrix (zero rows dropped) and the pivot
    /// column for each remaining row.
    pub fn rref_with_order(&self, column_order: &[usize]) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in column_order {
            if next == m.rows {
                break;
            }
            let Some(pr) = (next..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(next, pr);
            let inv = f.inv(m.get(next, c)).expect("nonzero pivot");
            for x in m.row_mut(next) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(next).to_vec();
            for r in 0..m.rows {
                if r == next {
                    continue;
                }
                let factor = m.get(r, c);
                if factor == 0 {
                    continue;
                }
                for (x, &y) in m.row_mut(r).iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
            pivots.push(c);
            next += 1;
        }
        m.data.truncate(next * m.cols);
        m.rows = next;
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : self * x^T = 0}`, one vector per row.
    pub fn kernel(&self) -> Matrix {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(row, fc)));
            }
        }
        out
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> bool {
        self.rank() == self.stack(other).rank()
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let v = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}
