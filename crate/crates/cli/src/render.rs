//! Plain-text tables. Parameters print as `[n,k,d]` triples.

use std::fmt::Write;

use grm_core::analysis::{
    format_enumerator, BoundObservation, CatalogItem, DistanceResult, OpenProblemEvidence,
};
use grm_core::code::CodeContext;
use grm_core::field::FieldDescriptor;
use grm_core::{AnalysisReport, CodeDescriptor};
use serde::Serialize;

fn field(f: &FieldDescriptor) -> String {
    if f.k == 1 {
        format!("GF({}) modulus {:?}", f.p, f.modulus)
    } else {
        format!("GF({}^{}) modulus {:?}", f.p, f.k, f.modulus)
    }
}

fn set(members: &[usize]) -> String {
    let body: Vec<String> = members.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(", "))
}

fn row(out: &mut String, label: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{label:<14}{value}");
}

fn distance(d: &DistanceResult) -> String {
    if d.is_exact() {
        d.value.to_string()
    } else {
        format!(">={}", d.value)
    }
}

pub fn descriptor(d: &CodeDescriptor) -> String {
    let mut out = String::new();
    let name = match &d.extended {
        Some(_) => format!("extend({})", d.params),
        None => d.params.to_string(),
    };
    row(&mut out, "code", name);
    match &d.extended {
        Some(e) => {
            row(&mut out, "[n,k]", format!("[{},{}]", e.length, d.k));
            row(
                &mut out,
                "defining set",
                format!(
                    "{} ({} elements)",
                    set(&e.defining_set),
                    e.defining_set.len()
                ),
            );
        }
        None => {
            row(&mut out, "[n,k]", format!("[{},{}]", d.n, d.k));
            row(
                &mut out,
                "defining set",
                format!(
                    "{} ({} elements)",
                    set(&d.defining_set),
                    d.defining_set.len()
                ),
            );
        }
    }
    row(&mut out, "base field", field(&d.base_field));
    row(&mut out, "splitting", field(&d.ext_field));
    row(
        &mut out,
        "generator",
        format!(
            "{:?} (degree {})",
            d.generator,
            d.generator.len().saturating_sub(1)
        ),
    );
    if d.trivial {
        row(&mut out, "note", "trivial code");
    }
    out
}

pub fn report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let name = match &r.code.extended {
        Some(_) => format!("extend({})", r.code.params),
        None => r.code.params.to_string(),
    };
    row(&mut out, "code", name);
    match &r.d {
        Some(d) => {
            row(
                &mut out,
                "[n,k,d]",
                format!("[{},{},{}]", r.n, r.k, distance(d)),
            );
            let status = match (d.is_exact(), d.algebraic_bound_used) {
                (true, false) => "exact",
                (true, true) => "exact (search met the Hartmann-Tzeng bound)",
                (false, _) => "lower bound only",
            };
            let method = serde_json::to_value(d.method)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned));
            row(
                &mut out,
                "distance",
                format!(
                    "{status} via {} ({} messages, least weight seen {})",
                    method.unwrap_or_default(),
                    d.enumeration_count,
                    d.upper_bound
                ),
            );
        }
        None => row(
            &mut out,
            "[n,k,d]",
            format!("[{},{},-] (zero code)", r.n, r.k),
        ),
    }
    let b = &r.bounds;
    let mut bounds = format!("BCH {}, Hartmann-Tzeng {}", b.bch, b.hartmann_tzeng);
    match (b.closed_form_lower, b.closed_form_upper) {
        (Some(lo), Some(hi)) => {
            let _ = write!(bounds, ", closed form {lo} <= d <= {hi}");
        }
        (Some(lo), None) => {
            let _ = write!(bounds, ", closed form d >= {lo}");
        }
        _ => {}
    }
    row(&mut out, "bounds", bounds);
    let dc = &r.dimension_check;
    row(
        &mut out,
        "dimension",
        match dc.closed_form {
            Some(f) if dc.agrees => format!("{} (closed form {f}, agrees)", dc.computed),
            Some(f) => format!("{} (closed form {f}, DISAGREES)", dc.computed),
            None => format!("{} (no closed form)", dc.computed),
        },
    );
    if let Some(w) = &r.weights {
        row(
            &mut out,
            "weights",
            format_enumerator(w.iter().map(|(&i, &a)| (i, a))),
        );
    }
    if let Some(designs) = &r.designs {
        row(&mut out, "designs", "weight  blocks  lambda  2-design");
        for d in designs {
            let verdict = if d.is_nontrivial() {
                format!("2-({},{},{})", d.v, d.k, d.lambda.unwrap_or_default())
            } else if d.complete {
                "complete (trivial)".to_string()
            } else {
                "no".to_string()
            };
            let lambda = d
                .lambda
                .map(|l| l.to_string())
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "{:<14}{:>6}  {:>6}  {:>6}  {verdict}",
                "", d.k, d.b, lambda
            );
        }
    }
    if let Some(inv) = r.affine_invariant {
        let text = match (&r.affine_witness, inv) {
            (_, true) => "invariant (defining set closed under the p-adic order)".to_string(),
            (Some(w), false) => format!(
                "not invariant: {} <= {} p-adically, {} in set, {} not",
                w.r, w.s, w.s, w.r
            ),
            (None, false) => "not invariant".to_string(),
        };
        row(&mut out, "affine", text);
    }
    out
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub items: Vec<CatalogItem>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifySummary {
    pub fn new(items: Vec<CatalogItem>) -> Self {
        let passed = items.iter().filter(|i| i.pass).count();
        let failed = items.len() - passed;
        VerifySummary {
            items,
            passed,
            failed,
        }
    }
}

pub fn verify(s: &VerifySummary) -> String {
    let mut out = String::new();
    for i in &s.items {
        let tag = if i.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag}  {:<11} {}", i.category.name(), i.name);
        if i.pass {
            let _ = writeln!(out, "      {:<11} {}", "", i.actual);
        } else {
            let _ = writeln!(out, "      {:<11} expected {}", "", i.expected);
            let _ = writeln!(out, "      {:<11} actual   {}", "", i.actual);
        }
    }
    let _ = writeln!(out, "{} passed, {} failed", s.passed, s.failed);
    out
}

#[derive(Debug, Serialize)]
pub struct Factor {
    pub leader: usize,
    pub coset: Vec<usize>,
    /// Ascending coefficients.
    pub minimal_polynomial: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct Factorization {
    pub q: usize,
    pub n: usize,
    pub m: u32,
    pub splitting_field: FieldDescriptor,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(ctx: &CodeContext) -> Self {
        let factors = ctx
            .factors()
            .map(|(leader, p)| Factor {
                leader,
                coset: ctx.cosets().coset_containing(leader).to_vec(),
                minimal_polynomial: p.coeffs().to_vec(),
            })
            .collect();
        Factorization {
            q: ctx.q(),
            n: ctx.n(),
            m: ctx.m(),
            splitting_field: ctx.ext_field().descriptor(),
            factors,
        }
    }
}

pub fn factorization(f: &Factorization) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "x^{} - 1 over GF({}): {} irreducible factors, roots in {}",
        f.n,
        f.q,
        f.factors.len(),
        field(&f.splitting_field)
    );
    let _ = writeln!(
        out,
        "{:>8}  {:>6}  minimal polynomial (ascending)",
        "leader", "degree"
    );
    for fac in &f.factors {
        let _ = writeln!(
            out,
            "{:>8}  {:>6}  {:?}",
            fac.leader,
            fac.minimal_polynomial.len() - 1,
            fac.minimal_polynomial
        );
    }
    out
}

#[derive(Debug, Serialize)]
pub struct CosetList {
    pub q: usize,
    pub n: usize,
    pub cosets: Vec<Vec<usize>>,
}

impl CosetList {
    pub fn new(ctx: &CodeContext) -> Self {
        CosetList {
            q: ctx.q(),
            n: ctx.n(),
            cosets: ctx.cosets().cosets().to_vec(),
        }
    }
}

pub fn cosets(c: &CosetList) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}-cyclotomic cosets modulo {}: {}",
        c.q,
        c.n,
        c.cosets.len()
    );
    for coset in &c.cosets {
        let _ = writeln!(out, "C_{:<6} {}", coset[0], set(coset));
    }
    out
}

fn observation(o: &BoundObservation) -> String {
    let verdict = match o.attained {
        Some(true) => "bound attained",
        Some(false) => "bound not attained",
        None => "undecided within budget",
    };
    format!(
        "d {} vs lower bound {}: {verdict}",
        distance(&o.distance),
        o.bound
    )
}

pub fn evidence(e: &OpenProblemEvidence) -> String {
    let mut out = String::new();
    row(
        &mut out,
        "GRM",
        format!("({},{},{}) {}", e.q, e.m, e.h, observation(&e.grm)),
    );
    row(
        &mut out,
        "dual",
        format!(
            "{} (Hartmann-Tzeng {})",
            observation(&e.dual.observation),
            e.dual.hartmann_tzeng
        ),
    );
    row(
        &mut out,
        "reversible",
        match &e.reversible {
            Some(o) => observation(o),
            None => "no reversible code or no bound for this h".into(),
        },
    );
    out
}
