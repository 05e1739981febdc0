//! Independent checks of the set-algebra constructions.

use serde::{Deserialize, Serialize};

use super::weights::weight_distribution;
use super::AnalysisError;
use crate::code::{
    complement, dual, pgrm_in, CodeContext, CodeError, CyclicCode, Family, LinearCode,
};
use std::sync::Arc;

/// Compares the dual from defining sets with the null space of the generator
/// matrix.
pub fn dual_matches_kernel(c: &CyclicCode) -> bool {
    let g = c.generator_matrix();
    let kernel = g.kernel();
    let d = dual(c).generator_matrix();
    kernel.rows() == d.rows() && kernel.row_space_contains(&d) && d.row_space_contains(&kernel)
}

/// Whether `dual(c)` and `complement(c)` have equal weight distributions.
pub fn dual_and_complement_agree(c: &CyclicCode, limit: u64) -> Result<bool, AnalysisError> {
    let d = weight_distribution(&dual(c), limit)?;
    let h = weight_distribution(&complement(c)?, limit)?;
    Ok(d == h)
}

/// Outcome of comparing `PGRM(l)^⊥` with the sum-zero subcode of
/// `PGRM(l')` for two candidate orders `l'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PgrmDualCheck {
    /// `l' = m(q-1) - l`; `None` when that order is out of range.
    pub order_m_q_minus_1_minus_l: Option<bool>,
    /// `l' = m(q-1) - 1 - l`.
    pub order_shifted_by_one: bool,
}

/// Defining set of the sum-zero subcode of `PGRM(l')` is `T ∪ {0}`.
fn sum_zero_subcode(ctx: &Arc<CodeContext>, l: u32) -> Result<CyclicCode, CodeError> {
    let p = pgrm_in(ctx, l)?;
    let t = p.defining_set().with(0);
    CyclicCode::from_defining_set(
        ctx,
        Family::Custom {
            q: ctx.q(),
            n: ctx.n(),
        },
        t,
    )
}

pub fn pgrm_dual_relation(q: usize, m: u32, l: u32) -> Result<PgrmDualCheck, CodeError> {
    let ctx = CodeContext::primitive(q, m)?;
    let d = dual(&pgrm_in(&ctx, l)?);
    let top = m * (q as u32 - 1);
    let literal = if top - l < top {
        Some(sum_zero_subcode(&ctx, top - l)?.defining_set() == d.defining_set())
    } else {
        None
    };
    let shifted = sum_zero_subcode(&ctx, top - 1 - l)?.defining_set() == d.defining_set();
    Ok(PgrmDualCheck {
        order_m_q_minus_1_minus_l: literal,
        order_shifted_by_one: shifted,
    })
}
