//! Codeword enumeration over message space.
//!
//! Only projective representatives are visited: the first nonzero message
//! coordinate is fixed to 1, so each one-dimensional subspace is seen once.
//! Work is split into prefix tasks that rayon runs in parallel; results are
//! collected in task order and merged in that order.

use rayon::prelude::*;

use super::kernel::{mismatches, ScaledRows, Symbols};

/// Receives each visited codeword as the pair `(c * row, -acc)`; the
/// codeword is their difference and its weight is their mismatch count.
pub(crate) trait Visitor: Send + Sized {
    fn visit(&mut self, weight: usize, row: &[u8], neg_acc: &[u8]);
    fn merge(&mut self, other: Self);
}

struct Engine<'a> {
    sym: &'a Symbols,
    rows: &'a ScaledRows,
    k: usize,
}

impl Engine<'_> {
    fn dfs<V: Visitor>(
        &self,
        depth: usize,
        acc: &[u8],
        leading: bool,
        bufs: &mut [Vec<u8>],
        v: &mut V,
        count: &mut u64,
    ) {
        let q = self.sym.q();
        if depth + 1 == self.k {
            let neg = &mut bufs[0];
            self.sym.neg_to(neg, acc);
            let first = usize::from(leading);
            let last = if leading { 2 } else { q };
            for c in first..last {
                let row = self.rows.get(depth, c);
                v.visit(mismatches(row, neg), row, neg);
            }
            *count += (last - first) as u64;
            return;
        }
        let (head, tail) = bufs.split_first_mut().expect("buffer per depth");
        let last = if leading { 2 } else { q };
        for c in 0..last {
            if c == 0 {
                self.dfs(depth + 1, acc, leading, tail, v, count);
            } else {
                self.sym.add_to(head, acc, self.rows.get(depth, c));
                self.dfs(depth + 1, head, false, tail, v, count);
            }
        }
    }
}

/// Prefixes `(u_0, ..., u_{p-1})` in projective form, with their partial sums.
fn prefixes(sym: &Symbols, rows: &ScaledRows, p: usize) -> Vec<(Vec<u8>, bool)> {
    let q = sym.q();
    let mut out = vec![(vec![0u8; rows.len()], true)];
    for d in 0..p {
        let mut next = Vec::with_capacity(out.len() * q);
        for (acc, leading) in out {
            let last = if leading { 2 } else { q };
            for c in 0..last {
                if c == 0 {
                    next.push((acc.clone(), leading));
                } else {
                    let mut s = vec![0u8; acc.len()];
                    sym.add_to(&mut s, &acc, rows.get(d, c));
                    next.push((s, false));
                }
            }
        }
        out = next;
    }
    out
}

/// Visits every nonzero codeword up to scalars. Returns the merged visitor
/// and the number of codewords visited.
pub(crate) fn exhaustive<V, F>(sym: &Symbols, rows: &ScaledRows, make: F) -> (V, u64)
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    let k = rows.rows();
    let mut root = make();
    if k == 0 {
        return (root, 0);
    }
    let engine = Engine { sym, rows, k };
    // Fixed split depth (independent of the thread count) for determinism.
    let mut p = 0;
    while p + 1 < k && sym.q().pow(p as u32) < 256 {
        p += 1;
    }
    let tasks = prefixes(sym, rows, p);
    let results: Vec<(V, u64)> = tasks
        .par_iter()
        .map(|(acc, leading)| {
            let mut v = make();
            let mut count = 0;
            let mut bufs = vec![vec![0u8; rows.len()]; k - p + 1];
            engine.dfs(p, acc, *leading, &mut bufs, &mut v, &mut count);
            (v, count)
        })
        .collect();
    let mut total = 0;
    for (v, c) in results {
        root.merge(v);
        total += c;
    }
    (root, total)
}

/// Messages of Hamming weight exactly `w` (first nonzero entry 1) against a
/// systematic generator `[I | P]`, with `rows` holding `P`. Returns the least
/// codeword weight `w + wt(uP)` seen and the number of messages.
pub(crate) fn level_minimum(sym: &Symbols, rows: &ScaledRows, w: usize) -> (usize, u64) {
    let k = rows.rows();
    assert!(w >= 1 && w <= k);
    let len = rows.len();
    let q = sym.q();
    let zero = vec![0u8; len];
    if w == 1 {
        let best = (0..k)
            .map(|i| 1 + mismatches(rows.get(i, 1), &zero))
            .min()
            .unwrap_or(usize::MAX);
        return (best, k as u64);
    }
    // Tasks: first position (coefficient 1) and, for w >= 3, the second
    // position with its coefficient.
    let mut tasks: Vec<(usize, usize, usize)> = Vec::new();
    for i1 in 0..=k - w {
        if w == 2 {
            tasks.push((i1, usize::MAX, 0));
        } else {
            for i2 in i1 + 1..=k - w + 1 {
                for c2 in 1..q {
                    tasks.push((i1, i2, c2));
                }
            }
        }
    }
    let results: Vec<(usize, u64)> = tasks
        .par_iter()
        .map(|&(i1, i2, c2)| {
            let mut bufs = vec![vec![0u8; len]; w];
            let mut best = usize::MAX;
            let mut count = 0u64;
            if i2 == usize::MAX {
                combos(
                    sym,
                    rows,
                    i1 + 1,
                    w - 1,
                    rows.get(i1, 1),
                    &mut bufs,
                    &mut best,
                    &mut count,
                );
            } else {
                let (head, tail) = bufs.split_first_mut().unwrap();
                sym.add_to(head, rows.get(i1, 1), rows.get(i2, c2));
                combos(sym, rows, i2 + 1, w - 2, head, tail, &mut best, &mut count);
            }
            (best.saturating_add(w), count)
        })
        .collect();
    results
        .into_iter()
        .fold((usize::MAX, 0), |(b, n), (x, c)| (b.min(x), n + c))
}

/// Chooses `remaining` more positions from `start..k` with nonzero
/// coefficients, tracking the least weight of the redundancy part.
#[allow(clippy::too_many_arguments)]
fn combos(
    sym: &Symbols,
    rows: &ScaledRows,
    start: usize,
    remaining: usize,
    acc: &[u8],
    bufs: &mut [Vec<u8>],
    best: &mut usize,
    count: &mut u64,
) {
    let k = rows.rows();
    let q = sym.q();
    if remaining == 1 {
        let neg = &mut bufs[0];
        sym.neg_to(neg, acc);
        let mut local = *best;
        for i in start..k {
            for c in 1..q {
                local = local.min(mismatches(rows.get(i, c), neg));
            }
        }
        *best = local;
        *count += ((k - start) * (q - 1)) as u64;
        return;
    }
    let (head, tail) = bufs.split_first_mut().expect("buffer per level");
    for i in start..=k - remaining {
        for c in 1..q {
            sym.add_to(head, acc, rows.get(i, c));
            combos(sym, rows, i + 1, remaining - 1, head, tail, best, count);
        }
    }
}

/// Histogram of codeword weights.
#[derive(Debug, Clone)]
pub(crate) struct Histogram(pub Vec<u64>);

impl Visitor for Histogram {
    #[inline]
    fn visit(&mut self, weight: usize, _: &[u8], _: &[u8]) {
        self.0[weight] += 1;
    }

    fn merge(&mut self, other: Self) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }
}

/// Least nonzero weight.
#[derive(Debug, Clone)]
pub(crate) struct MinWeight(pub usize);

impl Visitor for MinWeight {
    #[inline]
    fn visit(&mut self, weight: usize, _: &[u8], _: &[u8]) {
        self.0 = self.0.min(weight);
    }

    fn merge(&mut self, other: Self) {
        self.0 = self.0.min(other.0);
    }
}
