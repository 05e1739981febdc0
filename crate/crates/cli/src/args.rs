use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grm_core::analysis::{
    Category, DistanceBudget, HtCaps, DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_INFORMATION_SET_LIMIT,
};
use grm_core::field::DEFAULT_TABLE_BUDGET;
use grm_core::Family;

use crate::error::CliError;

/// Construct and analyse generalized Reed-Muller type cyclic codes.
///
/// Every run is determined by its command line; there are no configuration
/// files.
#[derive(Debug, Parser)]
#[command(name = "grmcodes", version)]
pub struct Cli {
    /// Cap on enumeration worker threads (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print its descriptor.
    Construct(ConstructArgs),
    /// Dimension, distance, bounds and optional enumerator, designs and
    /// affine-invariance check.
    Analyze(AnalyzeArgs),
    /// Re-derive every tabulated example and report pass/fail per item.
    VerifyPaper(VerifyArgs),
    /// Factor x^n - 1 over GF(q) into minimal polynomials.
    Factor(LengthArgs),
    /// List the q-cyclotomic cosets modulo n.
    Cosets(LengthArgs),
    /// Compare computed distances with the closed-form lower bounds for
    /// GRM(q,m,h), its dual and the reversible code.
    Evidence(EvidenceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Grm,
    Pgrm,
    Bch,
    Reversible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Field order (a prime power).
    #[arg(long)]
    pub q: usize,
    /// Extension degree; the length is q^m - 1.
    #[arg(long)]
    pub m: Option<u32>,
    /// Digit weight threshold (grm, reversible).
    #[arg(long)]
    pub h: Option<u32>,
    /// Order (pgrm).
    #[arg(long)]
    pub l: Option<u32>,
    /// Length (bch).
    #[arg(long)]
    pub n: Option<usize>,
    /// Designed distance (bch).
    #[arg(long)]
    pub delta: Option<usize>,
    /// First exponent of the consecutive run (bch).
    #[arg(long, default_value_t = 1)]
    pub b: usize,
    /// Take the dual code.
    #[arg(long, conflicts_with = "complement")]
    pub dual: bool,
    /// Take the complement code (generated by the check polynomial).
    #[arg(long)]
    pub complement: bool,
    /// Largest field order for which log/antilog tables are built.
    #[arg(long, default_value_t = DEFAULT_TABLE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub field_cap: u64,
}

impl CodeArgs {
    fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("--family {family} needs --{flag}")))
    }

    pub fn family(&self) -> Result<Family, CliError> {
        let q = self.q;
        let base = match self.family {
            FamilyKind::Grm => Family::Grm {
                q,
                m: Self::need(self.m, "m", "grm")?,
                h: Self::need(self.h, "h", "grm")?,
            },
            FamilyKind::Pgrm => Family::Pgrm {
                q,
                m: Self::need(self.m, "m", "pgrm")?,
                l: Self::need(self.l, "l", "pgrm")?,
            },
            FamilyKind::Bch => Family::Bch {
                q,
                n: Self::need(self.n, "n", "bch")?,
                delta: Self::need(self.delta, "delta", "bch")?,
                b: self.b,
            },
            FamilyKind::Reversible => Family::ReversibleGrm {
                q,
                m: Self::need(self.m, "m", "reversible")?,
                h: Self::need(self.h, "h", "reversible")?,
            },
        };
        Ok(if self.dual {
            Family::Dual { of: Box::new(base) }
        } else if self.complement {
            Family::Complement { of: Box::new(base) }
        } else {
            base
        })
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest q^k enumerated exhaustively (also bounds weight and design
    /// enumeration).
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_enum: u64,
    /// Largest number of messages the information-set search may visit.
    #[arg(long, default_value_t = DEFAULT_INFORMATION_SET_LIMIT, value_parser = clap::value_parser!(u64).range(1..))]
    pub is_budget: u64,
    /// Number of consecutive runs tried by the Hartmann-Tzeng search.
    #[arg(long, default_value_t = HtCaps::default().max_runs, value_parser = parse_positive)]
    pub ht_cap: usize,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl BudgetArgs {
    pub fn distance(&self) -> DistanceBudget {
        DistanceBudget {
            exhaustive_limit: self.max_enum,
            information_set_limit: self.is_budget,
        }
    }

    pub fn ht(&self) -> HtCaps {
        HtCaps {
            max_runs: self.ht_cap,
            ..HtCaps::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Describe the extended code (parity coordinate appended).
    #[arg(long)]
    pub extend: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Analyse the extended code.
    #[arg(long)]
    pub extend: bool,
    /// Enumerate the full weight distribution.
    #[arg(long)]
    pub weights: bool,
    /// Check which weight classes hold 2-designs.
    #[arg(long)]
    pub designs: bool,
    /// Run the Kasami-Lin-Peterson closure test on the extended defining set.
    #[arg(long)]
    pub affine: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run one category only.
    #[arg(long, value_parser = parse_category)]
    pub only: Option<Category>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_category(s: &str) -> Result<Category, String> {
    s.parse::<Category>().map_err(|e| {
        let names: Vec<_> = Category::ALL.iter().map(|c| c.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
pub struct LengthArgs {
    #[arg(long)]
    pub q: usize,
    /// Length, coprime to q.
    #[arg(long, required_unless_present = "m", conflicts_with = "m")]
    pub n: Option<usize>,
    /// Shorthand for n = q^m - 1.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_TABLE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub field_cap: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl LengthArgs {
    pub fn length(&self) -> Result<usize, CliError> {
        match (self.n, self.m) {
            (Some(n), _) => Ok(n),
            (None, Some(m)) => self
                .q
                .checked_pow(m)
                .map(|v| v - 1)
                .ok_or_else(|| CliError::Usage(format!("{}^{m} overflows", self.q))),
            (None, None) => Err(CliError::Usage("one of --n or --m is required".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct EvidenceArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub h: u32,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}
