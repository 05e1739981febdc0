//! 2-designs held by the supports of fixed-weight codewords, verified by
//! counting pair coverage directly.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::dimension::binomial;
use super::distance::fits;
use super::enumerate::{exhaustive, Visitor};
use super::kernel::{byte_rows, ScaledRows, Symbols};
use super::AnalysisError;
use crate::code::LinearCode;

type Support = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignCertificate {
    pub t: usize,
    /// Points (code length).
    pub v: usize,
    /// Block size (codeword weight).
    pub k: usize,
    /// Number of distinct supports.
    pub b: u64,
    /// Common pair count when uniform.
    pub lambda: Option<u64>,
    pub uniform: bool,
    /// Every k-subset is a block, or `k = v`; such designs carry no
    /// information about the code.
    pub complete: bool,
    /// Pair count -> number of pairs with that count.
    pub pair_coverage_histogram: BTreeMap<u64, u64>,
}

impl DesignCertificate {
    /// `lambda C(v,2) = b C(k,2)`.
    pub fn counts_consistent(&self) -> bool {
        match self.lambda {
            Some(l) => {
                l as u128 * binomial(self.v as u64, 2)
                    == self.b as u128 * binomial(self.k as u64, 2)
            }
            None => !self.uniform,
        }
    }

    pub fn is_nontrivial(&self) -> bool {
        self.uniform && !self.complete
    }
}

struct Supports {
    words: usize,
    targets: Vec<bool>,
    found: BTreeMap<usize, BTreeSet<Support>>,
}

impl Visitor for Supports {
    fn visit(&mut self, weight: usize, row: &[u8], neg_acc: &[u8]) {
        if !self.targets[weight] {
            return;
        }
        let mut s = vec![0u64; self.words];
        for (i, (x, y)) in row.iter().zip(neg_acc).enumerate() {
            if x != y {
                s[i / 64] |= 1 << (i % 64);
            }
        }
        self.found.entry(weight).or_default().insert(s);
    }

    fn merge(&mut self, other: Self) {
        for (w, set) in other.found {
            self.found.entry(w).or_default().extend(set);
        }
    }
}

fn certificate(v: usize, k: usize, blocks: &BTreeSet<Support>) -> DesignCertificate {
    let mut pairs = vec![0u64; v * v];
    for s in blocks {
        let pts: Vec<usize> = (0..v).filter(|&i| s[i / 64] >> (i % 64) & 1 == 1).collect();
        for (a, &i) in pts.iter().enumerate() {
            for &j in &pts[a + 1..] {
                pairs[i * v + j] += 1;
            }
        }
    }
    let mut hist = BTreeMap::new();
    for i in 0..v {
        for j in i + 1..v {
            *hist.entry(pairs[i * v + j]).or_insert(0u64) += 1;
        }
    }
    let uniform = hist.len() == 1;
    let b = blocks.len() as u64;
    DesignCertificate {
        t: 2,
        v,
        k,
        b,
        lambda: uniform.then(|| *hist.keys().next().unwrap()),
        uniform,
        complete: k == v || b as u128 == binomial(v as u64, k as u64),
        pair_coverage_histogram: hist,
    }
}

fn collect_supports<C: LinearCode + ?Sized>(
    code: &C,
    weights: Option<&[usize]>,
    limit: u64,
) -> Result<BTreeMap<usize, BTreeSet<Support>>, AnalysisError> {
    let field = code.base_field();
    let q = field.order() as usize;
    let k = code.dimension();
    let n = code.length();
    if !fits(q, k, limit) {
        return Err(AnalysisError::BudgetExceeded {
            what: "support enumeration",
            q,
            k,
            limit,
        });
    }
    let mut targets = vec![weights.is_none(); n + 1];
    targets[0] = false;
    if let Some(ws) = weights {
        for &w in ws.iter().filter(|&&w| w <= n) {
            targets[w] = true;
        }
    }
    let sym = Symbols::new(field)?;
    let cols: Vec<usize> = (0..n).collect();
    let rows = ScaledRows::new(&sym, &byte_rows(&code.generator_matrix(), &cols), n);
    let words = n.div_ceil(64);
    let (s, _) = exhaustive(&sym, &rows, || Supports {
        words,
        targets: targets.clone(),
        found: BTreeMap::new(),
    });
    Ok(s.found)
}

/// Certificate for the supports of weight-`weight` codewords.
pub fn extract_design<C: LinearCode + ?Sized>(
    code: &C,
    weight: usize,
    limit: u64,
) -> Result<DesignCertificate, AnalysisError> {
    let found = collect_supports(code, Some(&[weight]), limit)?;
    let blocks = found
        .get(&weight)
        .ok_or(AnalysisError::EmptyWeightClass { weight })?;
    Ok(certificate(code.length(), weight, blocks))
}

/// One certificate per nonzero weight present in the code, by weight.
pub fn support_designs<C: LinearCode + ?Sized>(
    code: &C,
    limit: u64,
) -> Result<Vec<DesignCertificate>, AnalysisError> {
    let v = code.length();
    Ok(collect_supports(code, None, limit)?
        .iter()
        .map(|(&w, blocks)| certificate(v, w, blocks))
        .collect())
}
