mod args;
mod error;
mod render;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;
use grm_core::analysis::{
    analyze, open_problem_evidence, verify_reference_tables, AnalysisOptions, CatalogOptions,
};
use grm_core::code::{extend, CodeContext};
use grm_core::field::prime_power;
use grm_core::{CodeDescriptor, CyclicCode};
use serde::Serialize;

use args::{Cli, CodeArgs, Command, FamilyKind, Format, LengthArgs, OutputArgs};
use error::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Construct(a) => {
            let c = build(&a.code)?;
            let desc = if a.extend {
                CodeDescriptor::of_extended(&extend(&c))
            } else {
                CodeDescriptor::of(&c)
            };
            emit(&a.out, &desc, render::descriptor)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(a) => {
            let c = build(&a.code)?;
            let opts = AnalysisOptions {
                budget: a.budget.distance(),
                ht_caps: a.budget.ht(),
                extend: a.extend,
                weights: a.weights,
                designs: a.designs,
                affine: a.affine,
            };
            let report = analyze(&c, &opts)?;
            emit(&a.out, &report, render::report)?;
            if report.fully_certified() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("warning: minimum distance not certified within budget; reported value is a lower bound");
                Ok(ExitCode::from(3))
            }
        }
        Command::VerifyPaper(a) => {
            let opts = CatalogOptions {
                budget: a.budget.distance(),
                ht_caps: a.budget.ht(),
                only: a.only,
                ..CatalogOptions::default()
            };
            let items = verify_reference_tables(&opts);
            let summary = render::VerifySummary::new(items);
            emit(&a.out, &summary, render::verify)?;
            Ok(if summary.failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Factor(a) => {
            let ctx = context_for_length(&a)?;
            emit(
                &a.out,
                &render::Factorization::new(&ctx),
                render::factorization,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cosets(a) => {
            let ctx = context_for_length(&a)?;
            emit(&a.out, &render::CosetList::new(&ctx), render::cosets)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Evidence(a) => {
            check_order(a.q)?;
            let ev = open_problem_evidence(a.q, a.m, a.h, &a.budget.distance(), &a.budget.ht())?;
            emit(&a.out, &ev, render::evidence)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_order(q: usize) -> Result<(), CliError> {
    if q < 2 || prime_power(q as u64).is_none() {
        return Err(CliError::Usage(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// Validates the raw numbers, then builds the field tables and the code.
fn build(a: &CodeArgs) -> Result<CyclicCode, CliError> {
    let family = a.family()?;
    check_order(a.q)?;
    let ctx = match a.family {
        FamilyKind::Bch => {
            let n = a.n.unwrap_or_default();
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            CodeContext::with_budget(a.q, n, a.field_cap)?
        }
        _ => {
            let m = a.m.unwrap_or_default();
            match (a.q as u64).checked_pow(m) {
                Some(_) if m >= 1 => CodeContext::primitive_with_budget(a.q, m, a.field_cap)?,
                Some(_) => return Err(CliError::Usage("--m must be positive".into())),
                None => {
                    return Err(CliError::Budget(format!(
                        "{}^{m} does not fit in 64 bits",
                        a.q
                    )))
                }
            }
        }
    };
    Ok(family.build_in(&ctx)?)
}

fn context_for_length(a: &LengthArgs) -> Result<Arc<CodeContext>, CliError> {
    check_order(a.q)?;
    let n = a.length()?;
    if n == 0 {
        return Err(CliError::Usage("length must be positive".into()));
    }
    Ok(CodeContext::with_budget(a.q, n, a.field_cap)?)
}

fn emit<T: Serialize>(
    out: &OutputArgs,
    value: &T,
    table: fn(&T) -> String,
) -> Result<(), CliError> {
    let text = match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Table => table(value),
    };
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
