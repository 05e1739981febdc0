//! Finite fields `GF(p^k)` backed by log/antilog tables.
//!
//! Elements are encoded as integers in `[0, p^k)` whose base-`p` digits are
//! the coordinates in the polynomial basis `1, x, ..., x^(k-1)`, where `x` is
//! the class of the indeterminate modulo the defining primitive polynomial.
//! The same encoding is used in every serialised output, so it is stable and
//! language neutral.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the number of field elements a table may hold.
pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 20;

/// Fields up to this order also carry full addition/multiplication tables.
const SMALL_FIELD_ORDER: u32 = 256;

/// An element of a [`FieldTable`], in the digit-packed encoding.
pub type Elem = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{k}) exceeds the table budget of {budget} elements")]
    BudgetExceeded { p: u64, k: u32, budget: u64 },
    #[error("modulus {0:?} is not a monic primitive polynomial")]
    NotPrimitive(Vec<u32>),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("GF({base}) does not embed into GF({ext})")]
    IncompatibleOrders { base: u64, ext: u64 },
    #[error("no root of the base modulus found in GF({0})")]
    NoEmbedding(u64),
}

/// How two encoded elements are added.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AddRule {
    /// Characteristic 2: digits are bits, addition is XOR.
    Xor,
    /// Prime field with `p > 2`: plain modular addition.
    PrimeMod,
    /// Odd characteristic extension: digit-wise addition mod `p`.
    Digits,
}

/// A concrete finite field `GF(p^k)`.
///
/// Immutable after construction and cheap to share behind an [`Arc`].
#[derive(Clone)]
pub struct FieldTable {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    rule: AddRule,
    /// `exp[e] = alpha^e`, stored twice over so products need no reduction.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    add_tab: Option<Vec<u8>>,
    mul_tab: Option<Vec<u8>>,
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldTable {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldTable {}

/// Serialisable description of a field: `{p, k, modulus}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

impl FieldTable {
    /// `GF(p^k)` with the default table budget.
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        Self::with_budget(p, k, DEFAULT_TABLE_BUDGET)
    }

    /// `GF(p^k)` defined by the lexicographically smallest primitive
    /// polynomial of degree `k` over `GF(p)`.
    ///
    /// For `k = 1` the modulus is `x - g` with `g` the smallest primitive
    /// root modulo `p`.
    pub fn with_budget(p: u32, k: u32, budget: u64) -> Result<Self, FieldError> {
        check_params(p, k, budget)?;
        let modulus = if k == 1 {
            let g = smallest_primitive_root(p);
            vec![(p - g) % p, 1]
        } else {
            primitive_polynomials(p, k)
                .next()
                .expect("a primitive polynomial exists for every degree")
        };
        Ok(Self::build(p, k, modulus))
    }

    /// `GF(p^k)` defined by a caller-chosen modulus (ascending coefficients,
    /// monic, degree `k`). The modulus must be primitive.
    pub fn with_modulus(p: u32, modulus: Vec<u32>, budget: u64) -> Result<Self, FieldError> {
        if modulus.len() < 2 {
            return Err(FieldError::ZeroDegree);
        }
        let k = (modulus.len() - 1) as u32;
        check_params(p, k, budget)?;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(FieldError::NotPrimitive(modulus));
        }
        if !is_primitive(p, &modulus) {
            return Err(FieldError::NotPrimitive(modulus));
        }
        Ok(Self::build(p, k, modulus))
    }

    /// Builds the field for a prime power `q`.
    pub fn for_order(q: u64, budget: u64) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::with_budget(p as u32, k, budget)
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let order = p.pow(k);
        let group = (order - 1) as usize;
        let rule = if p == 2 {
            AddRule::Xor
        } else if k == 1 {
            AddRule::PrimeMod
        } else {
            AddRule::Digits
        };

        // Walk the powers of the root of the modulus in digit form.
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; order as usize];
        let mut digits = vec![0u32; k as usize];
        digits[0] = 1;
        for (e, slot) in exp[..group].iter_mut().enumerate() {
            let enc = encode_digits(&digits, p);
            *slot = enc;
            log[enc as usize] = e as u32;
            if k == 1 {
                // Multiplication by the root g of x - g.
                let g = (p - modulus[0]) % p;
                digits[0] = (digits[0] * g) % p;
            } else {
                let top = digits[k as usize - 1];
                for i in (1..k as usize).rev() {
                    digits[i] = digits[i - 1];
                }
                digits[0] = 0;
                if top != 0 {
                    for (i, d) in digits.iter_mut().enumerate() {
                        *d = (*d + (p - top) * modulus[i] % p) % p;
                    }
                }
            }
        }
        for e in 0..group {
            exp[group + e] = exp[e];
        }

        let mut field = FieldTable {
            p,
            k,
            order,
            modulus,
            rule,
            exp,
            log,
            add_tab: None,
            mul_tab: None,
        };
        if order <= SMALL_FIELD_ORDER {
            let n = order as usize;
            let mut add = vec![0u8; n * n];
            let mut mul = vec![0u8; n * n];
            for a in 0..order {
                for b in 0..order {
                    add[a as usize * n + b as usize] = field.add_slow(a, b) as u8;
                    mul[a as usize * n + b as usize] = field.mul_slow(a, b) as u8;
                }
            }
            field.add_tab = Some(add);
            field.mul_tab = Some(mul);
        }
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The defining primitive polynomial, ascending coefficients.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    /// The primitive element: the class of `x`.
    pub fn alpha(&self) -> Elem {
        self.exp[1 % self.exp.len()]
    }

    /// `alpha^e` for any `e`.
    pub fn exp(&self, e: u64) -> Elem {
        let group = (self.order - 1) as u64;
        self.exp[(e % group) as usize]
    }

    /// Discrete logarithm base `alpha`; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize])
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.order
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, i: i64) -> Elem {
        i.rem_euclid(self.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.add_tab {
            return t[(a * self.order + b) as usize] as Elem;
        }
        self.add_slow(a, b)
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        match self.rule {
            AddRule::Xor => a ^ b,
            AddRule::PrimeMod => (a + b) % self.p,
            AddRule::Digits => {
                let p = self.p;
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut place = 1;
                while a > 0 || b > 0 {
                    out += ((a % p + b % p) % p) * place;
                    place *= p;
                    a /= p;
                    b /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.rule {
            AddRule::Xor => a,
            AddRule::PrimeMod => (self.p - a) % self.p,
            AddRule::Digits => {
                let p = self.p;
                let mut a = a;
                let mut out = 0;
                let mut place = 1;
                while a > 0 {
                    out += ((p - a % p) % p) * place;
                    place *= p;
                    a /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.mul_tab {
            return t[(a * self.order + b) as usize] as Elem;
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let group = self.order - 1;
        Ok(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = (self.order - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % group)) % group) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let group = (self.order - 1) as u64;
        Some(group / gcd(group, l))
    }

    /// Iterator over all elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }
}

/// Injective homomorphism `GF(q) -> GF(q^m)` between two tables of the same
/// characteristic, with its inverse on the image.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    base: Arc<FieldTable>,
    ext: Arc<FieldTable>,
    forward: Vec<Elem>,
    backward: Vec<Elem>,
}

const NOT_IN_IMAGE: Elem = Elem::MAX;

impl SubfieldEmbedding {
    /// Sends the base primitive element to the first power
    /// `A^(j (q^m - 1)/(q - 1))` of the extension generator that is a root of
    /// the base modulus.
    pub fn new(base: Arc<FieldTable>, ext: Arc<FieldTable>) -> Result<Self, FieldError> {
        let incompatible = FieldError::IncompatibleOrders {
            base: base.order as u64,
            ext: ext.order as u64,
        };
        if base.p != ext.p || !ext.k.is_multiple_of(base.k) {
            return Err(incompatible);
        }
        let q = base.order as u64;
        let big = ext.order as u64;
        let step = (big - 1) / (q - 1);

        let eval_at = |g: Elem| -> Elem {
            // Base modulus coefficients lie in the prime field, encoded alike.
            base.modulus
                .iter()
                .rev()
                .fold(0, |acc, &c| ext.add(ext.mul(acc, g), c))
        };

        let image_gen = if base.k == 1 {
            // The base "generator" is the prime-field element g itself.
            base.alpha()
        } else {
            (1..q - 1)
                .filter(|j| gcd(*j, q - 1) == 1)
                .map(|j| ext.exp(j * step))
                .find(|&g| eval_at(g) == 0)
                .ok_or(FieldError::NoEmbedding(big))?
        };

        let mut forward = vec![0; base.order as usize];
        let mut backward = vec![NOT_IN_IMAGE; ext.order as usize];
        for a in base.elements() {
            let mut img = 0;
            let mut power = 1;
            let mut rest = a;
            for _ in 0..base.k {
                let digit = rest % base.p;
                img = ext.add(img, ext.mul(digit, power));
                power = ext.mul(power, image_gen);
                rest /= base.p;
            }
            forward[a as usize] = img;
            backward[img as usize] = a;
        }
        Ok(SubfieldEmbedding {
            base,
            ext,
            forward,
            backward,
        })
    }

    pub fn base(&self) -> &Arc<FieldTable> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<FieldTable> {
        &self.ext
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.forward[a as usize]
    }

    /// Pulls an extension element back into the base field, if it lies in
    /// the image.
    pub fn restrict(&self, a: Elem) -> Option<Elem> {
        match self.backward.get(a as usize) {
            Some(&b) if b != NOT_IN_IMAGE => Some(b),
            _ => None,
        }
    }
}

fn check_params(p: u32, k: u32, budget: u64) -> Result<(), FieldError> {
    if !is_prime(p as u64) {
        return Err(FieldError::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let size = (p as u64).checked_pow(k);
    match size {
        Some(s) if s <= budget && s <= u32::MAX as u64 => Ok(()),
        _ => Err(FieldError::BudgetExceeded {
            p: p as u64,
            k,
            budget,
        }),
    }
}

fn encode_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^s` with `p` prime; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut s = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p, s))
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let group = (p - 1) as u64;
    let factors = prime_factors(group);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| mod_pow(g as u64, group / r, p as u64) != 1)
        })
        .expect("every prime has a primitive root")
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// All monic primitive polynomials of degree `k >= 2` over `GF(p)`, in
/// increasing order of `sum c_i p^i` over the ascending coefficients.
pub fn primitive_polynomials(p: u32, k: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(k);
    (1..count).filter_map(move |v| {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut rest = v;
        for _ in 0..k {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        (coeffs[0] != 0 && is_primitive(p, &coeffs)).then_some(coeffs)
    })
}

/// Whether the class of `x` has order `p^k - 1` modulo the monic `modulus`.
pub(crate) fn is_primitive(p: u32, modulus: &[u32]) -> bool {
    let k = modulus.len() - 1;
    if modulus[0] == 0 {
        return false;
    }
    let group = (p as u64).pow(k as u32) - 1;
    if k == 1 {
        let g = (p - modulus[0]) % p;
        return g != 0
            && (group == 1
                || prime_factors(group)
                    .iter()
                    .all(|&r| mod_pow(g as u64, group / r, p as u64) != 1));
    }
    let one = {
        let mut v = vec![0u32; k];
        v[0] = 1;
        v
    };
    if x_pow_mod(p, modulus, group) != one {
        return false;
    }
    prime_factors(group)
        .iter()
        .all(|&r| x_pow_mod(p, modulus, group / r) != one)
}

/// `x^e mod modulus` over `GF(p)`, as a length-`k` ascending vector.
fn x_pow_mod(p: u32, modulus: &[u32], mut e: u64) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut acc = vec![0u32; k];
    acc[0] = 1;
    let mut base = vec![0u32; k];
    base[1 % k] = if k == 1 { (p - modulus[0]) % p } else { 1 };
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(p, modulus, &acc, &base);
        }
        base = mul_mod(p, modulus, &base, &base);
        e >>= 1;
    }
    acc
}

fn mul_mod(p: u32, modulus: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let k = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for d in (k..prod.len()).rev() {
        let top = prod[d];
        if top == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..k {
            let sub = top * modulus[i] as u64 % p64;
            prod[d - k + i] = (prod[d - k + i] + p64 - sub) % p64;
        }
    }
    prod.truncate(k);
    prod.into_iter().map(|c| c as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent primitivity check: walk the powers of x by brute force.
    fn brute_force_primitive(p: u32, modulus: &[u32]) -> bool {
        let k = modulus.len() - 1;
        let group = (p as u64).pow(k as u32) - 1;
        let mut v = vec![0u32; k];
        v[0] = 1;
        let mut x = vec![0u32; k];
        x[1] = 1;
        for t in 1..=group {
            v = mul_mod(p, modulus, &v, &x);
            let is_one = v[0] == 1 && v[1..].iter().all(|&c| c == 0);
            if is_one {
                return t == group;
            }
        }
        false
    }

    #[test]
    fn gf2_prime_field() {
        let f = FieldTable::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.alpha(), 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf16_modulus_is_smallest_primitive() {
        let f = FieldTable::new(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        // Brute-force oracle over every monic degree-4 polynomial.
        let mut first = None;
        for v in 0..16u32 {
            let mut m: Vec<u32> = (0..4).map(|i| (v >> i) & 1).collect();
            m.push(1);
            if m[0] != 0 && brute_force_primitive(2, &m) {
                first = Some(m);
                break;
            }
        }
        assert_eq!(first.as_deref(), Some(f.modulus()));
        // alpha^4 = alpha + 1
        assert_eq!(f.pow(2, 4), 3);
    }

    #[test]
    fn gf27_generator_has_full_order() {
        let f = FieldTable::new(3, 3).unwrap();
        let a = f.alpha();
        let mut acc = 1;
        for t in 1..=26u64 {
            acc = f.mul(acc, a);
            if t < 26 {
                assert_ne!(acc, 1, "alpha^{t} = 1");
            }
        }
        assert_eq!(acc, 1);
        assert!(brute_force_primitive(3, f.modulus()));
    }

    #[test]
    fn gf4_omega_squared() {
        let f = FieldTable::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn prime_field_modulus_uses_smallest_primitive_root() {
        let f5 = FieldTable::new(5, 1).unwrap();
        assert_eq!(f5.alpha(), 2);
        assert_eq!(f5.modulus(), &[3, 1]);
        let f7 = FieldTable::new(7, 1).unwrap();
        assert_eq!(f7.alpha(), 3);
        let f3 = FieldTable::new(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[1, 1]);
    }

    #[test]
    fn inverse_and_zero() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (7, 1), (3, 4)] {
            let f = FieldTable::new(p, k).unwrap();
            for a in 1..f.order() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
            assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
        }
    }

    #[test]
    fn every_nonzero_element_satisfies_fermat() {
        for (p, k) in [(2, 5), (3, 3), (5, 2), (2, 8), (13, 1)] {
            let f = FieldTable::new(p, k).unwrap();
            let group = (f.order() - 1) as u64;
            for a in 1..f.order() {
                assert_eq!(f.pow(a, group), 1);
                // pow agrees with repeated multiplication for small exponents
                let mut acc = 1;
                for e in 0..5 {
                    assert_eq!(f.pow(a, e), acc);
                    acc = f.mul(acc, a);
                }
            }
        }
    }

    #[test]
    fn exp_log_tables_are_consistent() {
        let f = FieldTable::new(3, 4).unwrap();
        let group = (f.order() - 1) as u64;
        for e in 0..group {
            assert_eq!(f.log(f.exp(e)), Some(e as u32));
            for e2 in [0, 1, 7, 40, 79] {
                assert_eq!(f.mul(f.exp(e), f.exp(e2)), f.exp((e + e2) % group));
            }
        }
    }

    #[test]
    fn digit_addition_matches_polynomial_coordinates() {
        let f = FieldTable::new(3, 2).unwrap();
        // (1 + 2x) + (2 + 2x) = 0 + 1x  -> encodings 7 + 8 = 3
        assert_eq!(f.add(7, 8), 3);
        assert_eq!(f.neg(7), 5);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldTable::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldTable::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(
            FieldTable::new(2, 21),
            Err(FieldError::BudgetExceeded { .. })
        ));
        assert!(FieldTable::with_budget(2, 21, 1 << 21).is_ok());
        assert!(matches!(
            FieldTable::with_modulus(2, vec![1, 0, 0, 0, 1], DEFAULT_TABLE_BUDGET),
            Err(FieldError::NotPrimitive(_))
        ));
    }

    #[test]
    fn deterministic_construction() {
        let a = FieldTable::new(5, 3).unwrap();
        let b = FieldTable::new(5, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exp, b.exp);
    }

    #[test]
    fn primitive_polynomial_search_agrees_with_brute_force() {
        for (p, k) in [(2, 3), (2, 5), (3, 2), (3, 3), (5, 2)] {
            let listed: Vec<_> = primitive_polynomials(p, k).collect();
            assert!(!listed.is_empty());
            for m in &listed {
                assert!(brute_force_primitive(p, m));
            }
            assert_eq!(FieldTable::new(p, k).unwrap().modulus(), &listed[0][..]);
        }
    }

    #[test]
    fn embedding_gf4_into_gf16() {
        let base = Arc::new(FieldTable::new(2, 2).unwrap());
        let ext = Arc::new(FieldTable::new(2, 4).unwrap());
        let emb = SubfieldEmbedding::new(base.clone(), ext.clone()).unwrap();
        assert_eq!(emb.embed(0), 0);
        assert_eq!(emb.embed(1), 1);
        assert_eq!(ext.element_order(emb.embed(base.alpha())), Some(3));
        for a in base.elements() {
            for b in base.elements() {
                assert_eq!(
                    emb.embed(base.add(a, b)),
                    ext.add(emb.embed(a), emb.embed(b))
                );
                assert_eq!(
                    emb.embed(base.mul(a, b)),
                    ext.mul(emb.embed(a), emb.embed(b))
                );
            }
            assert_eq!(emb.restrict(emb.embed(a)), Some(a));
        }
        let outside = ext
            .elements()
            .filter(|&e| emb.restrict(e).is_none())
            .count();
        assert_eq!(outside, 12);
    }

    #[test]
    fn embedding_prime_fields() {
        let base = Arc::new(FieldTable::new(2, 1).unwrap());
        let ext = Arc::new(FieldTable::new(2, 4).unwrap());
        let emb = SubfieldEmbedding::new(base, ext).unwrap();
        assert_eq!((emb.embed(0), emb.embed(1)), (0, 1));

        let base = Arc::new(FieldTable::new(5, 1).unwrap());
        let ext = Arc::new(FieldTable::new(5, 2).unwrap());
        let emb = SubfieldEmbedding::new(base.clone(), ext.clone()).unwrap();
        for a in base.elements() {
            for b in base.elements() {
                assert_eq!(
                    emb.embed(base.mul(a, b)),
                    ext.mul(emb.embed(a), emb.embed(b))
                );
            }
        }
    }

    #[test]
    fn embedding_rejects_incompatible_orders() {
        let base = Arc::new(FieldTable::new(2, 3).unwrap());
        let ext = Arc::new(FieldTable::new(2, 4).unwrap());
        assert!(matches!(
            SubfieldEmbedding::new(base, ext),
            Err(FieldError::IncompatibleOrders { .. })
        ));
        let base = Arc::new(FieldTable::new(3, 1).unwrap());
        let ext = Arc::new(FieldTable::new(2, 4).unwrap());
        assert!(SubfieldEmbedding::new(base, ext).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn distributivity(a in 0u32..81, b in 0u32..81, c in 0u32..81) {
                let f = FieldTable::new(3, 4).unwrap();
                prop_assert_eq!(
                    f.mul(f.add(a, b), c),
                    f.add(f.mul(a, c), f.mul(b, c))
                );
            }

            #[test]
            fn distributivity_char2(a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
                let f = FieldTable::new(2, 10).unwrap();
                prop_assert_eq!(
                    f.mul(f.add(a, b), c),
                    f.add(f.mul(a, c), f.mul(b, c))
                );
            }
        }
    }
}
