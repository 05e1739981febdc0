//! Minimum distance: exhaustive enumeration for small message spaces,
//! information-set enumeration otherwise.

use serde::{Deserialize, Serialize};

use super::dimension::binomial;
use super::enumerate::{exhaustive, level_minimum, MinWeight};
use super::kernel::{byte_rows, ScaledRows, Symbols};
use super::AnalysisError;
use crate::code::LinearCode;
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Exhaustive,
    InformationSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    /// The distance if exact, otherwise a certified lower bound.
    pub value: usize,
    pub status: DistanceStatus,
    pub method: DistanceMethod,
    /// Codewords (up to scalars) examined.
    pub enumeration_count: u64,
    /// Least weight actually seen.
    pub upper_bound: usize,
    /// Set when an algebraic lower bound (BCH or Hartmann-Tzeng) raised
    /// `value` past what enumeration alone certified.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub algebraic_bound_used: bool,
}

impl DistanceResult {
    pub fn is_exact(&self) -> bool {
        self.status == DistanceStatus::Exact
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBudget {
    /// Enumerate all codewords when `q^k` is at most this.
    pub exhaustive_limit: u64,
    /// Cap on messages examined by the information-set method.
    pub information_set_limit: u64,
}

pub const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 1 << 24;
pub const DEFAULT_INFORMATION_SET_LIMIT: u64 = 1 << 34;

impl Default for DistanceBudget {
    fn default() -> Self {
        DistanceBudget {
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            information_set_limit: DEFAULT_INFORMATION_SET_LIMIT,
        }
    }
}

/// Whether `q^k <= limit`.
pub(crate) fn fits(q: usize, k: usize, limit: u64) -> bool {
    u32::try_from(k)
        .ok()
        .and_then(|k| (q as u64).checked_pow(k))
        .is_some_and(|v| v <= limit)
}

pub fn min_distance<C: LinearCode + ?Sized>(
    code: &C,
    budget: &DistanceBudget,
) -> Result<DistanceResult, AnalysisError> {
    min_distance_with_bound(code, budget, 0)
}

/// As [`min_distance`], but the information-set search may stop as soon as
/// a codeword of weight `known_lower` is found. `known_lower` must be a
/// proven lower bound on the distance, such as the BCH bound.
pub fn min_distance_with_bound<C: LinearCode + ?Sized>(
    code: &C,
    budget: &DistanceBudget,
    known_lower: usize,
) -> Result<DistanceResult, AnalysisError> {
    let k = code.dimension();
    if k == 0 {
        return Err(AnalysisError::ZeroCode);
    }
    let field = code.base_field();
    let q = field.order() as usize;
    let sym = Symbols::new(field)?;
    let g = code.generator_matrix();
    let n = code.length();
    if fits(q, k, budget.exhaustive_limit) {
        let cols: Vec<usize> = (0..n).collect();
        let rows = ScaledRows::new(&sym, &byte_rows(&g, &cols), n);
        let (best, count) = exhaustive(&sym, &rows, || MinWeight(usize::MAX));
        return Ok(DistanceResult {
            value: best.0,
            status: DistanceStatus::Exact,
            method: DistanceMethod::Exhaustive,
            enumeration_count: count,
            upper_bound: best.0,
            algebraic_bound_used: false,
        });
    }
    information_set(
        &sym,
        &g,
        code.is_cyclic(),
        budget.information_set_limit,
        known_lower,
    )
}

/// One systematic form: redundancy rows and the number of its information
/// positions not covered by earlier forms.
struct SystematicForm {
    redundancy: ScaledRows,
    fresh: usize,
}

fn systematic_forms(sym: &Symbols, g: &Matrix, cyclic: bool) -> Vec<SystematicForm> {
    let n = g.cols();
    let k = g.rows();
    let mut used = vec![false; n];
    let mut forms = Vec::new();
    loop {
        let order: Vec<usize> = (0..n)
            .filter(|&c| !used[c])
            .chain((0..n).filter(|&c| used[c]))
            .collect();
        let (r, pivots) = g.rref_with_order(&order);
        debug_assert_eq!(pivots.len(), k);
        let fresh = pivots.iter().filter(|&&p| !used[p]).count();
        if fresh == 0 {
            break;
        }
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
            used[p] = true;
        }
        // Rows of r are ordered by pivot, so message i sits at pivots[i].
        let others: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        forms.push(SystematicForm {
            redundancy: ScaledRows::new(sym, &byte_rows(&r, &others), others.len()),
            fresh,
        });
        // Cyclic shifts of one form cover every other window.
        if cyclic {
            break;
        }
    }
    forms
}

fn information_set(
    sym: &Symbols,
    g: &Matrix,
    cyclic: bool,
    limit: u64,
    known_lower: usize,
) -> Result<DistanceResult, AnalysisError> {
    let n = g.cols();
    let k = g.rows();
    let q = sym.q() as u64;
    let forms = systematic_forms(sym, g, cyclic);
    // Lower bound once every message of weight <= w is done in every form.
    let lower = |w: usize| -> usize {
        if cyclic {
            // Each of the n windows of k consecutive coordinates holds more
            // than w nonzeros, so d k >= n (w + 1).
            (n * (w + 1)).div_ceil(k)
        } else {
            forms
                .iter()
                .map(|f| (w + 1).saturating_sub(k - f.fresh))
                .sum()
        }
    };
    let mut best = usize::MAX;
    let mut spent = 0u64;
    let mut done = 0;
    while done < k {
        if lower(done).max(known_lower) >= best {
            break;
        }
        let w = done + 1;
        let per_form =
            binomial(k as u64, w as u64).saturating_mul(((q - 1) as u128).pow(w as u32 - 1));
        let cost = per_form.saturating_mul(forms.len() as u128);
        if spent as u128 + cost > limit as u128 {
            return Ok(DistanceResult {
                value: lower(done).max(known_lower).max(1).min(best),
                status: DistanceStatus::LowerBoundOnly,
                method: DistanceMethod::InformationSet,
                enumeration_count: spent,
                upper_bound: best,
                algebraic_bound_used: known_lower > lower(done),
            });
        }
        for f in &forms {
            let (b, c) = level_minimum(sym, &f.redundancy, w);
            best = best.min(b);
            spent += c;
        }
        done = w;
    }
    Ok(DistanceResult {
        value: best,
        status: DistanceStatus::Exact,
        method: DistanceMethod::InformationSet,
        enumeration_count: spent,
        upper_bound: best,
        algebraic_bound_used: done < k && lower(done) < best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{dual, extend, grm, pgrm, reversible_grm};

    const FORCE_IS: DistanceBudget = DistanceBudget {
        exhaustive_limit: 1,
        information_set_limit: DEFAULT_INFORMATION_SET_LIMIT,
    };

    #[test]
    fn small_codes_exact() {
        let d = min_distance(&grm(3, 3, 1).unwrap(), &DistanceBudget::default()).unwrap();
        assert_eq!(d.value, 4);
        assert!(d.is_exact());
        assert_eq!(d.method, DistanceMethod::InformationSet);
        let d = min_distance(&dual(&grm(3, 3, 1).unwrap()), &DistanceBudget::default()).unwrap();
        assert_eq!((d.value, d.method), (15, DistanceMethod::Exhaustive));
        let d = min_distance(&pgrm(2, 4, 1).unwrap(), &DistanceBudget::default()).unwrap();
        assert_eq!(d.value, 7);
    }

    #[test]
    fn both_methods_agree() {
        let codes = [
            grm(2, 4, 1).unwrap(),
            grm(3, 2, 1).unwrap(),
            dual(&grm(3, 3, 2).unwrap()),
            reversible_grm(2, 4, 1).unwrap(),
            reversible_grm(5, 2, 1).unwrap(),
            pgrm(4, 2, 2).unwrap(),
        ];
        for c in &codes {
            let a = min_distance(c, &DistanceBudget::default()).unwrap();
            let b = min_distance(c, &FORCE_IS).unwrap();
            assert!(b.is_exact());
            assert_eq!(a.value, b.value, "{}", c.family());
        }
        // Non-cyclic path.
        for c in &codes[..4] {
            let e = extend(c);
            let a = min_distance(&e, &DistanceBudget::default()).unwrap();
            let b = min_distance(&e, &FORCE_IS).unwrap();
            assert_eq!(a.value, b.value);
        }
    }

    #[test]
    fn budget_gives_lower_bound_only() {
        let c = grm(3, 3, 1).unwrap();
        let tight = DistanceBudget {
            exhaustive_limit: 1,
            information_set_limit: 30,
        };
        let d = min_distance(&c, &tight).unwrap();
        assert_eq!(d.status, DistanceStatus::LowerBoundOnly);
        assert!(d.value <= 4);
    }

    #[test]
    fn zero_and_repetition_codes() {
        use crate::code::{CodeContext, CyclicCode, Family};
        use crate::cyclotomic::IndexSet;
        let ctx = CodeContext::primitive(3, 2).unwrap();
        let all = IndexSet::new(8, 0..8).unwrap();
        let zero = CyclicCode::from_defining_set(&ctx, Family::Custom { q: 3, n: 8 }, all).unwrap();
        assert!(matches!(
            min_distance(&zero, &DistanceBudget::default()),
            Err(AnalysisError::ZeroCode)
        ));
        let rep = grm(3, 2, 2).unwrap();
        assert_eq!(
            min_distance(&rep, &DistanceBudget::default())
                .unwrap()
                .value,
            8
        );
    }
}
