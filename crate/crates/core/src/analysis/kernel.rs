//! Byte-level vector arithmetic used by the enumeration loops.
//!
//! Field elements are stored as `u8`. A codeword is `acc + c * row`; rather
//! than forming it, leaves compare `c * row` against `-acc`, so a weight is a
//! count of mismatched bytes.

use super::AnalysisError;
use crate::field::FieldTable;
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy)]
enum AddKind {
    Xor,
    Mod(u8),
    Table,
}

#[derive(Debug, Clone)]
pub(crate) struct Symbols {
    q: usize,
    kind: AddKind,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

impl Symbols {
    pub fn new(f: &FieldTable) -> Result<Self, AnalysisError> {
        let q = f.order() as usize;
        if q > 256 {
            return Err(AnalysisError::FieldTooLarge { q });
        }
        let p = f.characteristic();
        let kind = if p == 2 {
            AddKind::Xor
        } else if f.degree() == 1 && p < 128 {
            AddKind::Mod(p as u8)
        } else {
            AddKind::Table
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(a as u32, b as u32) as u8;
                mul[a * q + b] = f.mul(a as u32, b as u32) as u8;
            }
        }
        let neg = (0..q).map(|a| f.neg(a as u32) as u8).collect();
        Ok(Symbols {
            q,
            kind,
            add,
            mul,
            neg,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn add_to(&self, out: &mut [u8], a: &[u8], b: &[u8]) {
        match self.kind {
            AddKind::Xor => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = x ^ y;
                }
            }
            AddKind::Mod(p) => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    let s = x + y;
                    *o = if s >= p { s - p } else { s };
                }
            }
            AddKind::Table => {
                let q = self.q;
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = self.add[x as usize * q + y as usize];
                }
            }
        }
    }

    pub fn neg_to(&self, out: &mut [u8], a: &[u8]) {
        match self.kind {
            AddKind::Xor => out.copy_from_slice(a),
            AddKind::Mod(p) => {
                for (o, &x) in out.iter_mut().zip(a) {
                    *o = if x == 0 { 0 } else { p - x };
                }
            }
            AddKind::Table => {
                for (o, &x) in out.iter_mut().zip(a) {
                    *o = self.neg[x as usize];
                }
            }
        }
    }

    pub fn scale(&self, a: &[u8], c: u8) -> Vec<u8> {
        let q = self.q;
        a.iter()
            .map(|&x| self.mul[c as usize * q + x as usize])
            .collect()
    }
}

/// Number of positions where `a` and `b` differ.
#[inline]
pub(crate) fn mismatches(a: &[u8], b: &[u8]) -> usize {
    // Byte-wide partial sums keep the comparison loop in vector registers.
    a.chunks(240)
        .zip(b.chunks(240))
        .map(|(x, y)| {
            x.iter()
                .zip(y)
                .fold(0u8, |acc, (p, q)| acc.wrapping_add(u8::from(p != q))) as usize
        })
        .sum()
}

/// Every row pre-multiplied by every scalar: `get(i, c) = c * row_i`.
#[derive(Debug, Clone)]
pub(crate) struct ScaledRows {
    q: usize,
    len: usize,
    rows: usize,
    data: Vec<u8>,
}

impl ScaledRows {
    pub fn new(sym: &Symbols, rows: &[Vec<u8>], len: usize) -> Self {
        let q = sym.q();
        let mut data = Vec::with_capacity(rows.len() * q * len);
        for r in rows {
            debug_assert_eq!(r.len(), len);
            for c in 0..q {
                data.extend(sym.scale(r, c as u8));
            }
        }
        ScaledRows {
            q,
            len,
            rows: rows.len(),
            data,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, c: usize) -> &[u8] {
        let start = (i * self.q + c) * self.len;
        &self.data[start..start + self.len]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
}

/// Rows of a matrix restricted to the given columns, as bytes.
pub(crate) fn byte_rows(m: &Matrix, columns: &[usize]) -> Vec<Vec<u8>> {
    (0..m.rows())
        .map(|r| columns.iter().map(|&c| m.get(r, c) as u8).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field(p: u32, k: u32) {
        let f = FieldTable::new(p, k).unwrap();
        let sym = Symbols::new(&f).unwrap();
        let q = f.order() as usize;
        let a: Vec<u8> = (0..q)
            .flat_map(|x| std::iter::repeat_n(x as u8, q))
            .collect();
        let b: Vec<u8> = (0..q).cycle().take(q * q).map(|x| x as u8).collect();
        let mut out = vec![0; q * q];
        sym.add_to(&mut out, &a, &b);
        for i in 0..q * q {
            assert_eq!(out[i] as u32, f.add(a[i] as u32, b[i] as u32));
        }
        sym.neg_to(&mut out, &a);
        for i in 0..q * q {
            assert_eq!(out[i] as u32, f.neg(a[i] as u32));
        }
        for c in 0..q as u8 {
            let s = sym.scale(&b, c);
            for i in 0..q * q {
                assert_eq!(s[i] as u32, f.mul(c as u32, b[i] as u32));
            }
        }
    }

    #[test]
    fn kernels_match_field_arithmetic() {
        for (p, k) in [
            (2, 1),
            (2, 3),
            (3, 1),
            (3, 2),
            (5, 1),
            (7, 1),
            (5, 2),
            (127, 1),
            (131, 1),
        ] {
            check_field(p, k);
        }
    }

    #[test]
    fn counting() {
        assert_eq!(mismatches(&[1, 2, 3, 0], &[1, 0, 3, 1]), 2);
        let long: Vec<u8> = (0..1000u32).map(|i| (i % 7) as u8).collect();
        assert_eq!(mismatches(&long, &vec![0; 1000]), 1000 - 143);
    }
}
