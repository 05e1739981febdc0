//! Per-instance evidence on whether the closed-form distance bounds are tight.
//! The output records observations only.

use serde::{Deserialize, Serialize};

use super::bounds::{closed_form_bounds, hartmann_tzeng_bound, HtCaps};
use super::distance::{min_distance, DistanceBudget, DistanceResult};
use super::AnalysisError;
use crate::code::{dual, grm, reversible_grm, CodeError, CyclicCode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundObservation {
    pub distance: DistanceResult,
    pub bound: u64,
    /// `Some(true)` if the exact distance equals the bound, `Some(false)` if
    /// the distance is known to exceed it, `None` if undecided within budget.
    pub attained: Option<bool>,
}

impl BoundObservation {
    fn new(distance: DistanceResult, bound: u64) -> Self {
        let v = distance.value as u64;
        let attained = if distance.is_exact() {
            Some(v == bound)
        } else if v > bound {
            Some(false)
        } else {
            None
        };
        BoundObservation {
            distance,
            bound,
            attained,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualObservation {
    #[serde(flatten)]
    pub observation: BoundObservation,
    pub hartmann_tzeng: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenProblemEvidence {
    pub q: usize,
    pub m: u32,
    pub h: u32,
    pub grm: BoundObservation,
    pub dual: DualObservation,
    /// `None` when the reversible code is zero or no bound applies.
    pub reversible: Option<BoundObservation>,
}

fn observe(
    c: &CyclicCode,
    budget: &DistanceBudget,
) -> Result<Option<BoundObservation>, AnalysisError> {
    let Some(bound) = closed_form_bounds(c.family(), false).lower else {
        return Ok(None);
    };
    Ok(Some(BoundObservation::new(min_distance(c, budget)?, bound)))
}

/// Distances of `GRM(q,m,h)`, its dual and the reversible code, each against
/// its closed-form lower bound. Requires `1 <= h <= m-1`.
pub fn open_problem_evidence(
    q: usize,
    m: u32,
    h: u32,
    budget: &DistanceBudget,
    ht_caps: &HtCaps,
) -> Result<OpenProblemEvidence, AnalysisError> {
    if h == 0 || h >= m {
        return Err(
            CodeError::InvalidParameters(format!("need 1 <= h <= m-1, got h={h}, m={m}")).into(),
        );
    }
    let c = grm(q, m, h)?;
    let grm_obs = observe(&c, budget)?.expect("GRM with h < m has a lower bound");
    let d = dual(&c);
    let dual_obs = DualObservation {
        observation: observe(&d, budget)?.expect("dual of GRM has a lower bound"),
        hartmann_tzeng: hartmann_tzeng_bound(d.defining_set(), ht_caps).bound,
    };
    let reversible = match reversible_grm(q, m, h) {
        Ok(r) => observe(&r, budget)?,
        Err(CodeError::ZeroDimension) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(OpenProblemEvidence {
        q,
        m,
        h,
        grm: grm_obs,
        dual: dual_obs,
        reversible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_m3() {
        let ev =
            open_problem_evidence(3, 3, 1, &DistanceBudget::default(), &HtCaps::default()).unwrap();
        assert_eq!(
            (ev.grm.distance.value, ev.grm.bound, ev.grm.attained),
            (4, 4, Some(true))
        );
        let dual = &ev.dual.observation;
        assert_eq!(
            (dual.distance.value, dual.bound, dual.attained),
            (15, 10, Some(false))
        );
        assert!(ev.dual.hartmann_tzeng >= 10);
        let rev = ev.reversible.unwrap();
        assert!(rev.distance.value as u64 >= rev.bound);
    }

    #[test]
    fn undecided_when_budget_is_tiny() {
        let budget = DistanceBudget {
            exhaustive_limit: 1,
            information_set_limit: 1,
        };
        let ev = open_problem_evidence(3, 3, 1, &budget, &HtCaps::default()).unwrap();
        assert!(ev.grm.attained.is_none() || ev.grm.distance.is_exact());
    }

    #[test]
    fn rejects_out_of_range_h() {
        assert!(
            open_problem_evidence(3, 3, 3, &DistanceBudget::default(), &HtCaps::default()).is_err()
        );
        assert!(
            open_problem_evidence(3, 3, 0, &DistanceBudget::default(), &HtCaps::default()).is_err()
        );
    }

    #[test]
    fn binary_zero_reversible_is_skipped() {
        let ev =
            open_problem_evidence(2, 4, 2, &DistanceBudget::default(), &HtCaps::default()).unwrap();
        assert!(ev.reversible.is_none());
        assert_eq!(ev.dual.observation.attained, Some(true));
    }
}
