//! Integer machinery for cyclic codes: `q`-cyclotomic cosets, base-`q` digit
//! weights, the digit-weight index sets and the `p`-adic partial order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::gcd;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("gcd(n = {n}, q = {q}) != 1")]
    NotCoprime { n: usize, q: usize },
    #[error("length must be positive")]
    ZeroLength,
    #[error("{s} is outside 0..{n}")]
    OutOfRange { s: usize, n: usize },
    #[error("h = {h} outside 1..={m}")]
    BadWeight { h: u32, m: u32 },
}

fn check_coprime(n: usize, q: usize) -> Result<(), CyclotomicError> {
    if n == 0 {
        return Err(CyclotomicError::ZeroLength);
    }
    if gcd(n as u64, q as u64) != 1 {
        return Err(CyclotomicError::NotCoprime { n, q });
    }
    Ok(())
}

/// The coset `{s q^i mod n}`, sorted ascending.
pub fn coset_of(s: usize, n: usize, q: usize) -> Result<Vec<usize>, CyclotomicError> {
    check_coprime(n, q)?;
    if s >= n {
        return Err(CyclotomicError::OutOfRange { s, n });
    }
    let mut out = vec![s];
    let mut x = s * q % n;
    while x != s {
        out.push(x);
        x = x * q % n;
    }
    out.sort_unstable();
    Ok(out)
}

/// Smallest `m >= 1` with `q^m = 1 (mod n)`.
pub fn multiplicative_order(q: usize, n: usize) -> Result<u32, CyclotomicError> {
    check_coprime(n, q)?;
    if n == 1 {
        return Ok(1);
    }
    let mut x = q % n;
    let mut m = 1;
    while x != 1 {
        x = x * q % n;
        m += 1;
    }
    Ok(m)
}

/// The partition of `{0..n-1}` into `q`-cyclotomic cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetStructure {
    n: usize,
    q: usize,
    cosets: Vec<Vec<usize>>,
    /// `index[a]` is the position in `cosets` of the coset holding `a`.
    index: Vec<usize>,
}

impl CosetStructure {
    pub fn new(n: usize, q: usize) -> Result<Self, CyclotomicError> {
        check_coprime(n, q)?;
        let mut index = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for s in 0..n {
            if index[s] != usize::MAX {
                continue;
            }
            let c = coset_of(s, n, q)?;
            for &a in &c {
                index[a] = cosets.len();
            }
            cosets.push(c);
        }
        Ok(CosetStructure {
            n,
            q,
            cosets,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Cosets ordered by leader.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Coset leaders, ascending.
    pub fn leaders(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub fn coset_containing(&self, a: usize) -> &[usize] {
        &self.cosets[self.index[a]]
    }

    pub fn leader_of(&self, a: usize) -> usize {
        self.cosets[self.index[a]][0]
    }

    /// Position of `a`'s coset in [`cosets`](Self::cosets).
    pub fn coset_index(&self, a: usize) -> usize {
        self.index[a]
    }

    /// Whether `set` (ignoring a marker `n`) is a union of whole cosets.
    pub fn is_union_of_cosets(&self, set: &IndexSet) -> bool {
        set.iter()
            .filter(|&a| a < self.n)
            .all(|a| self.coset_containing(a).iter().all(|&b| set.contains(b)))
    }
}

fn digits(mut a: u64, q: u64, m: u32) -> impl Iterator<Item = u64> {
    (0..m).map(move |_| {
        let d = a % q;
        a /= q;
        d
    })
}

/// Sum of the base-`q` digits of `a` (the `q`-weight).
pub fn q_weight(a: u64, q: u64, m: u32) -> u32 {
    digits(a, q, m).sum::<u64>() as u32
}

/// Number of nonzero base-`q` digits of `a`.
pub fn digit_hamming_weight(a: u64, q: u64, m: u32) -> u32 {
    digits(a, q, m).filter(|&d| d != 0).count() as u32
}

/// Number of base-`q` digits strictly between `0` and `q - 1`.
pub fn gamma(a: u64, q: u64, m: u32) -> u32 {
    digits(a, q, m).filter(|&d| d >= 1 && d < q - 1).count() as u32
}

/// Number of base-`q` digits equal to `q - 1`.
pub fn full_digits(a: u64, q: u64, m: u32) -> u32 {
    digits(a, q, m).filter(|&d| d == q - 1).count() as u32
}

/// `r ⪯ s`: every `p`-adic digit of `r` is at most the matching digit of `s`.
pub fn p_adic_leq(r: u64, s: u64, p: u64, total_digits: u32) -> bool {
    digits(r, p, total_digits)
        .zip(digits(s, p, total_digits))
        .all(|(x, y)| x <= y)
}

/// A sorted set of exponents modulo `n`. The value `n` itself may appear as
/// the marker used by extended defining sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Members must lie in `0..=n`; duplicates are dropped.
    pub fn new(
        n: usize,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, CyclotomicError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&s) = set.iter().find(|&&s| s > n) {
            return Err(CyclotomicError::OutOfRange { s, n });
        }
        Ok(IndexSet {
            n,
            members: set.into_iter().collect(),
        })
    }

    pub(crate) fn from_sorted(n: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        IndexSet { n, members }
    }

    pub fn empty(n: usize) -> Self {
        IndexSet {
            n,
            members: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Membership bitmap over `0..=n`.
    pub fn bitmap(&self) -> Vec<bool> {
        let mut v = vec![false; self.n + 1];
        for &a in &self.members {
            v[a] = true;
        }
        v
    }

    /// `{(n - a) mod n}`; the marker `n` is kept as is.
    pub fn negate(&self) -> Self {
        let n = self.n;
        let set: BTreeSet<usize> = self
            .members
            .iter()
            .map(|&a| if a == n { n } else { (n - a) % n })
            .collect();
        IndexSet {
            n,
            members: set.into_iter().collect(),
        }
    }

    /// `{0..n-1}` minus this set.
    pub fn complement_in_n(&self) -> Self {
        let bm = self.bitmap();
        IndexSet {
            n: self.n,
            members: (0..self.n).filter(|&a| !bm[a]).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "index sets modulo different lengths");
        let set: BTreeSet<usize> = self.iter().chain(other.iter()).collect();
        IndexSet {
            n: self.n,
            members: set.into_iter().collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "index sets modulo different lengths");
        IndexSet {
            n: self.n,
            members: self.iter().filter(|&a| other.contains(a)).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.iter().all(|a| other.contains(a))
    }

    pub fn with(&self, a: usize) -> Self {
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&a) {
            members.insert(pos, a);
        }
        IndexSet { n: self.n, members }
    }
}

/// `I(q, m, h) = {1 <= a <= n-1 : 1 <= wt(a) <= h}` with `n = q^m - 1`.
pub fn index_set(q: u64, m: u32, h: u32) -> Result<IndexSet, CyclotomicError> {
    if h < 1 || h > m {
        return Err(CyclotomicError::BadWeight { h, m });
    }
    let n = q.pow(m) - 1;
    let members = (1..n)
        .filter(|&a| digit_hamming_weight(a, q, m) <= h)
        .map(|a| a as usize)
        .collect();
    Ok(IndexSet::from_sorted(n as usize, members))
}

/// `I(q, m, h)^c = {0} ∪ {1 <= b <= n-1 : wt(b) >= h + 1}`.
pub fn index_set_complement(q: u64, m: u32, h: u32) -> Result<IndexSet, CyclotomicError> {
    Ok(index_set(q, m, h)?.complement_in_n())
}

/// `N(i) = {a in 0..n-1 : wt(a) = i}`.
pub fn weight_class(q: u64, m: u32, i: u32) -> IndexSet {
    let n = q.pow(m) - 1;
    let members = (0..n)
        .filter(|&a| digit_hamming_weight(a, q, m) == i)
        .map(|a| a as usize)
        .collect();
    IndexSet::from_sorted(n as usize, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_of(1, 15, 2).unwrap(), vec![1, 2, 4, 8]);
        assert_eq!(coset_of(0, 15, 2).unwrap(), vec![0]);
        assert_eq!(coset_of(5, 15, 2).unwrap(), vec![5, 10]);
        assert_eq!(
            coset_of(1, 12, 2).unwrap_err(),
            CyclotomicError::NotCoprime { n: 12, q: 2 }
        );
        assert!(coset_of(15, 15, 2).is_err());
    }

    #[test]
    fn all_cosets_15_2() {
        let cs = CosetStructure::new(15, 2).unwrap();
        assert_eq!(cs.leaders(), vec![0, 1, 3, 5, 7]);
        assert_eq!(cs.cosets().len(), 5);
        // direct orbit enumeration
        let mut seen = [false; 15];
        let mut leaders = Vec::new();
        for s in 0..15 {
            if !seen[s] {
                leaders.push(s);
                let mut x = s;
                loop {
                    seen[x] = true;
                    x = x * 2 % 15;
                    if x == s {
                        break;
                    }
                }
            }
        }
        assert_eq!(cs.leaders(), leaders);
    }

    #[test]
    fn coset_sizes_divide_order() {
        let cs = CosetStructure::new(26, 3).unwrap();
        let m = multiplicative_order(3, 26).unwrap();
        assert_eq!(m, 3);
        for c in cs.cosets() {
            assert_eq!(m as usize % c.len(), 0);
        }
    }

    #[test]
    fn singletons_when_n_is_q_minus_one() {
        let cs = CosetStructure::new(4, 5).unwrap();
        assert!(cs.cosets().iter().all(|c| c.len() == 1));
        assert_eq!(cs.cosets().len(), 4);
    }

    #[test]
    fn partition_property() {
        for (n, q) in [(15, 2), (26, 3), (63, 4), (80, 3), (124, 5), (21, 2)] {
            let cs = CosetStructure::new(n, q).unwrap();
            let total: usize = cs.cosets().iter().map(Vec::len).sum();
            assert_eq!(total, n);
            let mut all: Vec<usize> = cs.cosets().iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
            for c in cs.cosets() {
                for &a in c {
                    assert!(c.contains(&(a * q % n)));
                    assert_eq!(cs.leader_of(a), *c.iter().min().unwrap());
                }
            }
        }
    }

    #[test]
    fn digit_functions() {
        assert_eq!(q_weight(26, 3, 3), 6);
        assert_eq!(q_weight(0, 3, 3), 0);
        for j in 0..4 {
            assert_eq!(q_weight(3u64.pow(j), 3, 4), 1);
        }
        assert_eq!(digit_hamming_weight(5, 3, 3), 2);
        assert_eq!(digit_hamming_weight(26, 3, 3), 3);
        assert_eq!(digit_hamming_weight(0, 3, 3), 0);
        assert_eq!(gamma(5, 3, 3), 1);
        assert_eq!(gamma(26, 3, 3), 0);
        for a in 0..255 {
            assert_eq!(gamma(a, 2, 8), 0);
        }
    }

    #[test]
    fn index_set_examples() {
        let i = index_set(3, 3, 1).unwrap();
        assert_eq!(i.members(), &[1, 2, 3, 6, 9, 18]);
        assert_eq!(index_set(2, 4, 1).unwrap().members(), &[1, 2, 4, 8]);
        assert_eq!(index_set(3, 3, 3).unwrap().len(), 25);
        assert!(index_set(3, 3, 0).is_err());
        assert!(index_set(3, 3, 4).is_err());
        for (q, m) in [(2u64, 5u32), (3, 4), (4, 3), (5, 3)] {
            for h in 1..=m {
                let expected: u64 = (1..=h as u64)
                    .map(|i| binom(m as u64, i) * (q - 1).pow(i as u32))
                    .sum::<u64>()
                    - u64::from(h == m);
                assert_eq!(index_set(q, m, h).unwrap().len() as u64, expected);
            }
        }
    }

    #[test]
    fn weights_constant_on_cosets() {
        for (q, m) in [(2u64, 6u32), (3, 4), (4, 3), (5, 3)] {
            let n = (q.pow(m) - 1) as usize;
            let cs = CosetStructure::new(n, q as usize).unwrap();
            for c in cs.cosets() {
                let w = digit_hamming_weight(c[0] as u64, q, m);
                let v = q_weight(c[0] as u64, q, m);
                let g = gamma(c[0] as u64, q, m);
                for &a in c {
                    assert_eq!(digit_hamming_weight(a as u64, q, m), w);
                    assert_eq!(q_weight(a as u64, q, m), v);
                    assert_eq!(gamma(a as u64, q, m), g);
                }
            }
            for h in 1..=m {
                assert!(cs.is_union_of_cosets(&index_set(q, m, h).unwrap()));
            }
        }
    }

    #[test]
    fn negation_and_complement() {
        let i = index_set(3, 3, 1).unwrap();
        let neg = i.negate();
        assert_eq!(neg.members(), &[8, 17, 20, 23, 24, 25]);
        assert_eq!(neg.negate(), i);
        let c = i.complement_in_n();
        assert_eq!(c.len(), 20);
        assert!(c.contains(0));
        assert_eq!(c.intersection(&i).len(), 0);
        assert_eq!(c.union(&i).len(), 26);
        assert_eq!(index_set_complement(3, 3, 1).unwrap(), c);
        let marked = IndexSet::new(26, [0, 26]).unwrap();
        assert_eq!(marked.negate().members(), &[0, 26]);
        assert!(IndexSet::new(26, [27]).is_err());
    }

    #[test]
    fn p_adic_order() {
        for s in 0..50 {
            assert!(p_adic_leq(0, s, 3, 4));
        }
        for r in 0..64u64 {
            for s in 0..64u64 {
                assert_eq!(p_adic_leq(r, s, 2, 6), r & s == r);
                if p_adic_leq(r, s, 2, 6) {
                    assert!(r <= s);
                }
            }
        }
        assert!(p_adic_leq(1, 2, 3, 1));
        assert!(!p_adic_leq(2, 1, 3, 1));
    }

    #[test]
    fn weight_class_sizes() {
        let (q, m) = (3u64, 4u32);
        for i in 0..=m {
            assert_eq!(
                weight_class(q, m, i).len() as u64,
                binom(m as u64, i as u64) * (q - 1).pow(i) - if i == m { 1 } else { 0 }
            );
        }
    }
}
