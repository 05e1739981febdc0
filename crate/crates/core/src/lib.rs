//! Cyclic codes from base-`q` digit conditions on exponents: construction
//! over finite fields, exact parameters, bounds, weight enumerators and the
//! designs their codewords hold.

pub mod analysis;
pub mod code;
pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod poly;

pub use analysis::{
    analyze, min_distance, AnalysisError, AnalysisOptions, AnalysisReport, DesignCertificate,
    DistanceBudget, DistanceResult, DistanceStatus, HtCaps, WeightDistribution,
};
pub use code::{
    CodeContext, CodeDescriptor, CodeError, CyclicCode, ExtendedCode, Family, LinearCode,
};
pub use cyclotomic::{CosetStructure, IndexSet};
pub use field::{FieldTable, SubfieldEmbedding};
pub use poly::Polynomial;
