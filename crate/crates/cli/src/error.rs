use std::process::ExitCode;

use grm_core::analysis::AnalysisError;
use grm_core::field::FieldError;
use grm_core::poly::PolyError;
use grm_core::CodeError;
use thiserror::Error;

/// Failure classes, each with a fixed exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Exit 2.
    #[error("invalid parameters: {0}")]
    Usage(String),
    /// Exit 3.
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// Exit 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 1,
        })
    }
}

fn from_field(e: &FieldError) -> fn(String) -> CliError {
    match e {
        FieldError::BudgetExceeded { .. } => CliError::Budget,
        FieldError::NotPrime(_)
        | FieldError::NotPrimePower(_)
        | FieldError::ZeroDegree
        | FieldError::NotPrimitive(_)
        | FieldError::IncompatibleOrders { .. } => CliError::Usage,
        FieldError::ZeroInverse | FieldError::NoEmbedding(_) => CliError::Internal,
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        let kind = match &e {
            CodeError::InvalidParameters(_)
            | CodeError::ZeroDimension
            | CodeError::NotUnionOfCosets { .. }
            | CodeError::ContextMismatch
            | CodeError::Cyclotomic(_) => CliError::Usage,
            CodeError::Field(f) | CodeError::Poly(PolyError::Field(f)) => from_field(f),
            CodeError::Poly(PolyError::LengthMismatch { .. } | PolyError::Cyclotomic(_)) => {
                CliError::Usage
            }
            CodeError::Poly(_) | CodeError::Inconsistent(_) => CliError::Internal,
        };
        kind(e.to_string())
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Code(c) => c.into(),
            AnalysisError::BudgetExceeded { .. } | AnalysisError::FieldTooLarge { .. } => {
                CliError::Budget(e.to_string())
            }
            AnalysisError::ZeroCode | AnalysisError::EmptyWeightClass { .. } => {
                CliError::Usage(e.to_string())
            }
            AnalysisError::NotADistribution(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}
