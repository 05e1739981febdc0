//! Affine invariance of extended primitive cyclic codes via downward
//! closure of the defining set under the p-adic digit order.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::IndexSet;

/// `r ⪯ s` with `r` outside the set while `s` is inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureWitness {
    pub r: u64,
    pub s: u64,
}

/// Checks that `set ⊆ {0, ..., p^digits - 1}` is closed downwards under `⪯`.
/// Decrementing one nonzero digit at a time suffices, since every `r ⪯ s` is
/// reached by a chain of such steps.
pub fn affine_closure(set: &IndexSet, p: u64, digits: u32) -> Result<(), ClosureWitness> {
    let top = p.pow(digits);
    for s in set.iter().map(|s| s as u64) {
        debug_assert!(s < top);
        let mut place = 1u64;
        let mut rest = s;
        for _ in 0..digits {
            if rest % p != 0 {
                let r = s - place;
                if !set.contains(r as usize) {
                    return Err(ClosureWitness { r, s });
                }
            }
            rest /= p;
            place *= p;
        }
    }
    Ok(())
}

/// `true` iff the extended code with defining set `set` over `GF(p^t)`,
/// length `p^(mt)`, is affine-invariant.
pub fn is_affine_invariant(set: &IndexSet, p: u64, mt: u32) -> bool {
    affine_closure(set, p, mt).is_ok()
}
