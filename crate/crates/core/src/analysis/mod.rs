//! Measurements on codes: dimensions, distances, weight enumerators, bounds,
//! affine invariance and designs.

mod affine;
mod bounds;
mod catalog;
mod crosscheck;
mod design;
mod dimension;
mod distance;
mod enumerate;
mod evidence;
mod kernel;
mod report;
mod weights;

use thiserror::Error;

use crate::code::CodeError;

pub use affine::{affine_closure, is_affine_invariant, ClosureWitness};
pub use bounds::{
    bch_bound, closed_form_bounds, hartmann_tzeng_bound, ClosedFormBounds, HtCaps, HtResult,
    HtWitness,
};
pub use catalog::{
    format_enumerator, reference_codes, sweep_instances, verify_reference_tables, CatalogItem,
    CatalogOptions, Category, Measured, ReferenceCode,
};
pub use crosscheck::{
    dual_and_complement_agree, dual_matches_kernel, pgrm_dual_relation, PgrmDualCheck,
};
pub use design::{extract_design, support_designs, DesignCertificate};
pub use dimension::{
    binomial, check_dimension, closed_form_dimension, grm_dimension, grm_dual_dimension,
    pgrm_dimension, pgrm_distance, reversible_dimension, DimensionCheck, ReversibleCase,
};
pub use distance::{
    min_distance, min_distance_with_bound, DistanceBudget, DistanceMethod, DistanceResult,
    DistanceStatus, DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_INFORMATION_SET_LIMIT,
};
pub use evidence::{open_problem_evidence, BoundObservation, DualObservation, OpenProblemEvidence};
pub use report::{analyze, AnalysisOptions, AnalysisReport, BoundsReport};
pub use weights::{weight_distribution, WeightDistribution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("{what} needs {q}^{k} codewords, over the limit of {limit}")]
    BudgetExceeded {
        what: &'static str,
        q: usize,
        k: usize,
        limit: u64,
    },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration supports fields of order at most 256, got {q}")]
    FieldTooLarge { q: usize },
    #[error("no codeword of weight {weight}")]
    EmptyWeightClass { weight: usize },
    #[error("not a weight distribution: {0}")]
    NotADistribution(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}
