use std::sync::Arc;

use super::{CyclicCode, LinearCode};
use crate::cyclotomic::IndexSet;
use crate::field::FieldTable;
use crate::linalg::Matrix;

/// A cyclic code with one overall parity coordinate appended. The new
/// coordinate is stored last and makes every codeword sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedCode {
    base: CyclicCode,
    defining_set: IndexSet,
}

pub fn extend(c: &CyclicCode) -> ExtendedCode {
    let t = c.defining_set();
    let n = c.n();
    let defining_set = if t.contains(0) { t.with(n) } else { t.with(0) };
    ExtendedCode {
        base: c.clone(),
        defining_set,
    }
}

impl ExtendedCode {
    pub fn base(&self) -> &CyclicCode {
        &self.base
    }

    /// `T ∪ {0}`, or `T ∪ {0, n}` when `0` was already in `T`.
    pub fn defining_set(&self) -> &IndexSet {
        &self.defining_set
    }

    /// True when `0` lies in the base defining set, so the added coordinate is
    /// identically zero.
    pub fn is_trivial_extension(&self) -> bool {
        self.base.defining_set().contains(0)
    }

    /// Appends `-(c_0 + ... + c_{n-1})` to a codeword of the base code.
    pub fn extend_word(&self, word: &[u32]) -> Vec<u32> {
        let f = self.base.base_field();
        let s = word.iter().fold(0, |acc, &x| f.add(acc, x));
        let mut out = word.to_vec();
        out.push(f.neg(s));
        out
    }
}

impl LinearCode for ExtendedCode {
    fn base_field(&self) -> &Arc<FieldTable> {
        self.base.base_field()
    }

    fn length(&self) -> usize {
        self.base.n() + 1
    }

    fn dimension(&self) -> usize {
        self.base.dimension()
    }

    fn generator_matrix(&self) -> Matrix {
        let g = self.base.generator_matrix();
        let rows: Vec<Vec<u32>> = (0..g.rows()).map(|r| self.extend_word(g.row(r))).collect();
        Matrix::from_rows(self.base_field().clone(), self.length(), &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{grm, reversible_grm};

    #[test]
    fn extended_parameters() {
        let e = extend(&grm(3, 3, 2).unwrap());
        assert_eq!((e.length(), e.dimension()), (27, 8));
        assert!(e.defining_set().contains(0));
        assert!(!e.defining_set().contains(26));
        let e = extend(&grm(2, 4, 1).unwrap());
        assert_eq!((e.length(), e.dimension()), (16, 11));
    }

    #[test]
    fn rows_sum_to_zero() {
        let e = extend(&grm(3, 3, 1).unwrap());
        let g = e.generator_matrix();
        let f = e.base_field();
        for r in 0..g.rows() {
            assert_eq!(g.row(r).iter().fold(0, |a, &x| f.add(a, x)), 0);
        }
        assert_eq!(g.rank(), e.dimension());
    }

    #[test]
    fn even_like_extension_is_zero() {
        let c = reversible_grm(3, 3, 1).unwrap();
        let e = extend(&c);
        assert!(e.is_trivial_extension());
        assert!(e.defining_set().contains(26));
        let g = e.generator_matrix();
        for r in 0..g.rows() {
            assert_eq!(g.get(r, 26), 0);
        }
    }
}
