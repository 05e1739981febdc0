//! The full analysis of one code, as a serialisable report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::affine::{affine_closure, ClosureWitness};
use super::bounds::{bch_bound, closed_form_bounds, hartmann_tzeng_bound, HtCaps};
use super::design::{support_designs, DesignCertificate};
use super::dimension::{check_dimension, DimensionCheck};
use super::distance::{min_distance_with_bound, DistanceBudget, DistanceResult};
use super::weights::weight_distribution;
use super::AnalysisError;
use crate::code::{extend, CodeDescriptor, CyclicCode, LinearCode};
use crate::field::prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[derive(Default)]
pub struct AnalysisOptions {
    pub budget: DistanceBudget,
    pub ht_caps: HtCaps,
    /// Analyse the extended code instead of the cyclic one.
    pub extend: bool,
    pub weights: bool,
    pub designs: bool,
    pub affine: bool,
}


#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub bch: usize,
    pub hartmann_tzeng: usize,
    #[serde(rename = "paper_lower")]
    pub closed_form_lower: Option<u64>,
    #[serde(rename = "paper_upper")]
    pub closed_form_upper: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub code: CodeDescriptor,
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code.
    pub d: Option<DistanceResult>,
    pub bounds: BoundsReport,
    pub dimension_check: DimensionCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<usize, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designs: Option<Vec<DesignCertificate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affine_invariant: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affine_witness: Option<ClosureWitness>,
}

impl AnalysisReport {
    /// True if every requested quantity was computed exactly.
    pub fn fully_certified(&self) -> bool {
        self.d.as_ref().is_none_or(|d| d.is_exact())
    }
}

pub fn analyze(c: &CyclicCode, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    let ext = extend(c);
    let target: &dyn LinearCode = if opts.extend { &ext } else { c };
    let t = c.defining_set();
    let cf = closed_form_bounds(c.family(), opts.extend);
    let bounds = BoundsReport {
        bch: bch_bound(t),
        hartmann_tzeng: hartmann_tzeng_bound(t, &opts.ht_caps).bound,
        closed_form_lower: cf.lower,
        closed_form_upper: cf.upper,
    };
    // Extending never lowers the distance, so the cyclic bounds carry over.
    let d = match min_distance_with_bound(target, &opts.budget, bounds.hartmann_tzeng) {
        Ok(d) => Some(d),
        Err(AnalysisError::ZeroCode) => None,
        Err(e) => return Err(e),
    };
    let weights = if opts.weights {
        Some(weight_distribution(target, opts.budget.exhaustive_limit)?.nonzero())
    } else {
        None
    };
    let designs = if opts.designs {
        Some(support_designs(target, opts.budget.exhaustive_limit)?)
    } else {
        None
    };
    let (affine_invariant, affine_witness) = if opts.affine && c.context().is_primitive_length() {
        let (p, s) = prime_power(c.q() as u64).expect("field order is a prime power");
        match affine_closure(ext.defining_set(), p, s * c.m()) {
            Ok(()) => (Some(true), None),
            Err(w) => (Some(false), Some(w)),
        }
    } else {
        (None, None)
    };
    let code = if opts.extend {
        CodeDescriptor::of_extended(&ext)
    } else {
        CodeDescriptor::of(c)
    };
    Ok(AnalysisReport {
        code,
        n: target.length(),
        k: target.dimension(),
        d,
        bounds,
        dimension_check: check_dimension(c),
        weights,
        designs,
        affine_invariant,
        affine_witness,
    })
}
