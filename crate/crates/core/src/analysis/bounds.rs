//! Lower bounds read off a defining set, and the closed-form distance
//! bounds attached to each family.

use serde::{Deserialize, Serialize};

use super::dimension::pgrm_distance;
use crate::code::Family;
use crate::cyclotomic::IndexSet;
use crate::field::gcd;

/// `r[x]` = number of consecutive exponents `x, x+1, ...` (mod n) in the set,
/// capped at `n`.
fn run_lengths(bitmap: &[bool]) -> Vec<usize> {
    let n = bitmap.len();
    let mut r = vec![0usize; n];
    if bitmap.iter().all(|&b| b) {
        r.fill(n);
        return r;
    }
    // Two passes backwards so runs wrapping through 0 are counted.
    let mut next = 0;
    for step in 0..2 * n {
        let x = (2 * n - 1 - step) % n;
        next = if bitmap[x] { next + 1 } else { 0 };
        r[x] = next.min(n);
    }
    r
}

fn exponent_bitmap(t: &IndexSet) -> Vec<bool> {
    let n = t.n();
    let mut bm = vec![false; n];
    for a in t.iter().filter(|&a| a < n) {
        bm[a] = true;
    }
    bm
}

/// `1 +` the longest cyclic run of consecutive exponents in `T`.
pub fn bch_bound(t: &IndexSet) -> usize {
    let bm = exponent_bitmap(t);
    1 + run_lengths(&bm).into_iter().max().unwrap_or(0)
}

/// Limits for the Hartmann-Tzeng search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtCaps {
    /// Largest step `b` tried.
    pub max_step: usize,
    /// Maximal runs examined per orientation, longest first.
    pub max_runs: usize,
}

impl Default for HtCaps {
    fn default() -> Self {
        HtCaps {
            max_step: usize::MAX,
            max_runs: 4096,
        }
    }
}

/// Parameters realising a Hartmann-Tzeng bound: `A = {a, ..., a+delta-2}`,
/// `B = {0, b, ..., s b}`, found in `T` or (if `negated`) in `-T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtWitness {
    pub a: usize,
    pub b: usize,
    pub delta: usize,
    pub s: usize,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtResult {
    pub bound: usize,
    /// `None` when the BCH bound was not improved.
    pub witness: Option<HtWitness>,
    /// True if a cap cut the search short; the bound is still valid.
    pub capped: bool,
}

/// Best `delta + s` over runs `A` of `T` (and of `-T`), steps `b` and
/// shifts `A + jb`, subject to `gcd(b, n) < delta`. Never below the BCH bound.
pub fn hartmann_tzeng_bound(t: &IndexSet, caps: &HtCaps) -> HtResult {
    let n = t.n();
    let bch = bch_bound(t);
    let mut best = HtResult {
        bound: bch,
        witness: None,
        capped: false,
    };
    if n <= 1 || bch > n {
        return best;
    }
    let plain = exponent_bitmap(t);
    let negated: Vec<bool> = (0..n).map(|x| plain[(n - x) % n]).collect();
    for (flip, bm) in [(false, plain), (true, negated)] {
        let r = run_lengths(&bm);
        let mut starts: Vec<usize> = (0..n).filter(|&x| bm[x] && !bm[(x + n - 1) % n]).collect();
        starts.sort_by_key(|&x| (std::cmp::Reverse(r[x]), x));
        if starts.len() > caps.max_runs {
            starts.truncate(caps.max_runs);
            best.capped = true;
        }
        let top = if caps.max_step < n - 1 {
            best.capped = true;
            caps.max_step
        } else {
            n - 1
        };
        for b in 1..=top {
            let g = gcd(b as u64, n as u64) as usize;
            let period = n / g;
            for &a in &starts {
                let mut run_min = r[a];
                if run_min < g {
                    continue;
                }
                let mut j = 0;
                loop {
                    let cand = run_min + 1 + j;
                    if cand > best.bound {
                        best.bound = cand;
                        best.witness = Some(HtWitness {
                            a,
                            b,
                            delta: run_min + 1,
                            s: j,
                            negated: flip,
                        });
                    }
                    if j + 1 >= period {
                        break;
                    }
                    let next = r[(a + (j + 1) * b) % n];
                    run_min = run_min.min(next);
                    if run_min < g {
                        break;
                    }
                    j += 1;
                }
            }
        }
    }
    best
}

/// Distance bounds stated in closed form for a family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormBounds {
    pub lower: Option<u64>,
    pub upper: Option<u64>,
}

/// Bounds for the family, for the cyclic code or (when `extended`) its
/// extension by a parity coordinate.
pub fn closed_form_bounds(family: &Family, extended: bool) -> ClosedFormBounds {
    let none = ClosedFormBounds::default();
    match *family {
        Family::Grm { q, m, h } if h < m => {
            let q = q as u64;
            let lower = (q.pow(h + 1) - 1) / (q - 1);
            let upper = 2 * q.pow(h) - u64::from(!extended);
            ClosedFormBounds {
                lower: Some(lower),
                upper: Some(upper),
            }
        }
        Family::Pgrm { q, m, l } if !extended => {
            let d = pgrm_distance(q as u64, m, l);
            ClosedFormBounds {
                lower: Some(d),
                upper: Some(d),
            }
        }
        Family::Bch { delta, .. } => ClosedFormBounds {
            lower: Some(delta as u64),
            upper: None,
        },
        Family::ReversibleGrm { q, m, h } if !extended => {
            // Each theorem's BCH bound has the same shape in h.
            if super::dimension::reversible_dimension(q as u64, m, h).is_none() {
                return none;
            }
            let q = q as u64;
            ClosedFormBounds {
                lower: Some(2 * (q.pow(h + 1) - 1) / (q - 1)),
                upper: None,
            }
        }
        Family::Dual { ref of } if !extended => match **of {
            Family::Grm { q, m, h } if h < m => ClosedFormBounds {
                lower: Some((q as u64).pow(m - h) + q as u64 - 2),
                upper: None,
            },
            _ => none,
        },
        _ => none,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{dual, grm, reversible_grm};
    use crate::cyclotomic::index_set;

    #[test]
    fn bch_examples() {
        assert_eq!(bch_bound(&index_set(3, 3, 1).unwrap()), 4);
        let t = IndexSet::new(26, 1..26).unwrap();
        assert_eq!(bch_bound(&t), 26);
        let r = reversible_grm(3, 4, 1).unwrap();
        assert_eq!(bch_bound(r.defining_set()), 8);
        assert_eq!(bch_bound(&IndexSet::empty(7)), 1);
    }

    #[test]
    fn wrapping_runs() {
        let t = IndexSet::new(10, [8, 9, 0, 1, 5]).unwrap();
        assert_eq!(bch_bound(&t), 5);
        assert_eq!(run_lengths(&exponent_bitmap(&t))[8], 4);
    }

    #[test]
    fn ht_examples() {
        let caps = HtCaps::default();
        let d = dual(&grm(3, 3, 1).unwrap());
        assert!(hartmann_tzeng_bound(d.defining_set(), &caps).bound >= 10);
        let d = dual(&grm(3, 3, 2).unwrap());
        assert!(hartmann_tzeng_bound(d.defining_set(), &caps).bound >= 4);
        let d = dual(&grm(2, 4, 2).unwrap());
        assert_eq!(hartmann_tzeng_bound(d.defining_set(), &caps).bound, 4);
    }

    /// Independent check of a witness: every element of A + B lies in T.
    #[test]
    fn ht_witness_is_valid() {
        for (q, m, h) in [(3, 3, 1), (3, 4, 1), (4, 3, 1), (5, 2, 1), (3, 4, 2)] {
            let d = dual(&grm(q, m, h).unwrap());
            let t = d.defining_set();
            let n = t.n();
            let res = hartmann_tzeng_bound(t, &HtCaps::default());
            let lower = (q as u64).pow(m - h) + q as u64 - 2;
            assert!(res.bound as u64 >= lower, "q={q} m={m} h={h}: {res:?}");
            if let Some(w) = res.witness {
                let set = if w.negated { t.negate() } else { t.clone() };
                assert!(gcd(w.b as u64, n as u64) < w.delta as u64);
                for i in 0..w.delta - 1 {
                    for j in 0..=w.s {
                        assert!(set.contains((w.a + i + j * w.b) % n));
                    }
                }
                assert_eq!(res.bound, w.delta + w.s);
            }
        }
    }

    #[test]
    fn caps_are_reported() {
        let d = dual(&grm(3, 3, 1).unwrap());
        let res = hartmann_tzeng_bound(
            d.defining_set(),
            &HtCaps {
                max_step: 2,
                max_runs: 1,
            },
        );
        assert!(res.capped);
        assert!(res.bound >= bch_bound(d.defining_set()));
    }

    #[test]
    fn family_bounds() {
        let b = closed_form_bounds(&Family::Grm { q: 3, m: 4, h: 2 }, false);
        assert_eq!((b.lower, b.upper), (Some(13), Some(17)));
        let b = closed_form_bounds(&Family::Grm { q: 3, m: 4, h: 2 }, true);
        assert_eq!(b.upper, Some(18));
        let b = closed_form_bounds(&Family::ReversibleGrm { q: 3, m: 4, h: 1 }, false);
        assert_eq!(b.lower, Some(8));
        let b = closed_form_bounds(&Family::ReversibleGrm { q: 4, m: 3, h: 2 }, false);
        assert_eq!(b.lower, Some(42));
        let of = Box::new(Family::Grm { q: 3, m: 3, h: 1 });
        assert_eq!(
            closed_form_bounds(&Family::Dual { of }, false).lower,
            Some(10)
        );
    }
}
