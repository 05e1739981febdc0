//! Closed-form dimensions for the code families, and the comparison against
//! `n - deg g` of a constructed code.

use serde::{Deserialize, Serialize};

use crate::code::{CyclicCode, Family};

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `sum_{i=lo}^{hi} C(m, i) (q-1)^i`.
fn weight_ball(q: u64, m: u32, lo: u32, hi: u32) -> i128 {
    (lo..=hi)
        .map(|i| binomial(m as u64, i as u64) as i128 * ((q - 1) as i128).pow(i))
        .sum()
}

/// `q^m - sum_{i=0}^{h} C(m,i)(q-1)^i`, valid for `1 <= h <= m-1`.
pub fn grm_dimension(q: u64, m: u32, h: u32) -> i128 {
    (q as i128).pow(m) - weight_ball(q, m, 0, h)
}

/// `sum_{i=1}^{h} C(m,i)(q-1)^i`.
pub fn grm_dual_dimension(q: u64, m: u32, h: u32) -> i128 {
    weight_ball(q, m, 1, h)
}

/// Alternating-sum dimension of `PGRM_q(l, m)`:
/// `sum_{i=0}^{l} sum_{j=0}^{m} (-1)^j C(m,j) C(i-jq+m-1, i-jq)`.
pub fn pgrm_dimension(q: u64, m: u32, l: u32) -> i128 {
    let mut total = 0i128;
    for i in 0..=l as i64 {
        for j in 0..=m as i64 {
            let t = i - j * q as i64;
            if t < 0 {
                continue;
            }
            let term = binomial(m as u64, j as u64) as i128
                * binomial((t + m as i64 - 1) as u64, t as u64) as i128;
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `(q - l0) q^(m - l1 - 1) - 1` with `l = l1 (q-1) + l0`, `0 <= l0 <= q-2`.
pub fn pgrm_distance(q: u64, m: u32, l: u32) -> u64 {
    let r = q as u32 - 1;
    let (l0, l1) = (l % r, l / r);
    (q - l0 as u64) * q.pow(m - l1 - 1) - 1
}

/// Which dimension formula applies to a reversible code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReversibleCase {
    /// `h <= ceil(m/2) - 1`: `I` and `-I` are disjoint.
    Disjoint,
    /// `m` even, `h = m/2`.
    EvenHalf,
    /// `m` odd, `h = (m+1)/2`.
    OddHalf,
}

/// The reversible-code dimension, or `None` when no formula covers `h`.
pub fn reversible_dimension(q: u64, m: u32, h: u32) -> Option<(ReversibleCase, i128)> {
    let qm = (q as i128).pow(m);
    if h >= 1 && h < m.div_ceil(2) {
        return Some((ReversibleCase::Disjoint, qm - 2 * weight_ball(q, m, 0, h)));
    }
    if m >= 2 && m.is_multiple_of(2) && h == m / 2 {
        let k = qm - 2 * weight_ball(q, m, 0, h) + binomial(m as u64, h as u64) as i128;
        return Some((ReversibleCase::EvenHalf, k));
    }
    if m >= 3 && m % 2 == 1 && h == m.div_ceil(2) {
        let extra = (4 + (q as i128 - 2) * (m as i128 + 1))
            * binomial(m as u64, (m as u64 - 1) / 2) as i128;
        debug_assert_eq!(extra % 2, 0);
        let k = qm - 2 * weight_ball(q, m, 0, h) + extra / 2;
        return Some((ReversibleCase::OddHalf, k));
    }
    None
}

/// Closed-form dimension for a family, where one is known.
pub fn closed_form_dimension(family: &Family) -> Option<i128> {
    match *family {
        Family::Grm { q, m, h } if h < m => Some(grm_dimension(q as u64, m, h)),
        Family::Pgrm { q, m, l } => Some(pgrm_dimension(q as u64, m, l)),
        Family::ReversibleGrm { q, m, h } => reversible_dimension(q as u64, m, h).map(|x| x.1),
        Family::Dual { ref of } | Family::Complement { ref of } => match **of {
            Family::Grm { q, m, h } if h < m => Some(grm_dual_dimension(q as u64, m, h)),
            _ => {
                let n = match **of {
                    Family::Grm { q, m, .. }
                    | Family::Pgrm { q, m, .. }
                    | Family::ReversibleGrm { q, m, .. } => (q as i128).pow(m) - 1,
                    _ => return None,
                };
                closed_form_dimension(of).map(|k| n - k)
            }
        },
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionCheck {
    pub computed: usize,
    pub closed_form: Option<i128>,
    pub agrees: bool,
}

/// Compares `n - deg g` with the family's closed form (if any).
pub fn check_dimension(c: &CyclicCode) -> DimensionCheck {
    let deg = c.generator().degree().unwrap_or(0);
    let computed = c.n() - deg;
    let closed_form = closed_form_dimension(c.family());
    DimensionCheck {
        computed,
        closed_form,
        agrees: closed_form.is_none_or(|k| k == computed as i128),
    }
}
