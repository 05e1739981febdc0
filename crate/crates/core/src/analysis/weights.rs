//! Weight distributions and the MacWilliams transform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::distance::fits;
use super::enumerate::{exhaustive, Histogram};
use super::kernel::{byte_rows, ScaledRows, Symbols};
use super::AnalysisError;
use crate::code::LinearCode;

/// `A_i` for `0 <= i <= length`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub length: usize,
    pub q: usize,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Least nonzero weight with a codeword, if any.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    /// The nonzero coefficients of the weight enumerator.
    pub fn nonzero(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    /// Distribution of the dual code:
    /// `B_j = |C|^{-1} sum_i A_i K_j(i)` with Krawtchouk polynomials `K_j`.
    pub fn macwilliams(&self) -> Result<WeightDistribution, AnalysisError> {
        let n = self.length;
        let qm1 = BigInt::from(self.q - 1);
        let size: BigInt = self.counts.iter().map(|&c| BigInt::from(c)).sum();
        if size.is_zero() {
            return Err(AnalysisError::NotADistribution("empty".into()));
        }
        let binom = binomial_table(n);
        let pow: Vec<BigInt> = (0..=n).map(|e| num_traits::pow(qm1.clone(), e)).collect();
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc = BigInt::zero();
            for (i, &a) in self.counts.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut k = BigInt::zero();
                for s in 0..=j.min(i) {
                    if j - s > n - i {
                        continue;
                    }
                    let term = &pow[j - s] * &binom[i][s] * &binom[n - i][j - s];
                    if s % 2 == 0 {
                        k += term;
                    } else {
                        k -= term;
                    }
                }
                acc += k * a;
            }
            if !(&acc % &size).is_zero() || acc.is_negative() {
                return Err(AnalysisError::NotADistribution(format!(
                    "transform coefficient {j} is not a nonnegative integer"
                )));
            }
            let b = (acc / &size)
                .to_u64()
                .ok_or_else(|| AnalysisError::NotADistribution("overflow".into()))?;
            out.push(b);
        }
        if out[0] != 1 {
            return Err(AnalysisError::NotADistribution(
                "transform does not start with 1".into(),
            ));
        }
        Ok(WeightDistribution {
            length: n,
            q: self.q,
            counts: out,
        })
    }
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for s in 1..=i {
            t[i][s] = &t[i - 1][s - 1] + &t[i - 1][s];
        }
    }
    t
}

/// Exact distribution by enumerating all `q^k` codewords; requires
/// `q^k <= limit`.
pub fn weight_distribution<C: LinearCode + ?Sized>(
    code: &C,
    limit: u64,
) -> Result<WeightDistribution, AnalysisError> {
    let field = code.base_field();
    let q = field.order() as usize;
    let k = code.dimension();
    let n = code.length();
    if !fits(q, k, limit) {
        return Err(AnalysisError::BudgetExceeded {
            what: "weight enumeration",
            q,
            k,
            limit,
        });
    }
    let sym = Symbols::new(field)?;
    let cols: Vec<usize> = (0..n).collect();
    let rows = ScaledRows::new(&sym, &byte_rows(&code.generator_matrix(), &cols), n);
    let (hist, _) = exhaustive(&sym, &rows, || Histogram(vec![0; n + 1]));
    let mut counts: Vec<u64> = hist.0.into_iter().map(|c| c * (q as u64 - 1)).collect();
    counts[0] += 1;
    Ok(WeightDistribution {
        length: n,
        q,
        counts,
    })
}
