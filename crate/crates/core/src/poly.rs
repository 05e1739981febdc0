//! Dense univariate polynomials over a [`FieldTable`], minimal polynomials
//! and the canonical factorisation of `x^n - 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cyclotomic::{CosetStructure, CyclotomicError};
use crate::field::{Elem, FieldError, FieldTable, SubfieldEmbedding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials over different fields")]
    FieldMismatch,
    #[error("reciprocal undefined: constant term is zero")]
    ZeroConstantTerm,
    #[error("coefficient {value} of m_{s}(x) lies outside the base field")]
    OutsideSubfield { s: usize, value: Elem },
    #[error("n = {n} does not divide q^m - 1 = {order_minus_one}")]
    LengthMismatch { n: usize, order_minus_one: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

/// A polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone)]
pub struct Polynomial {
    field: Arc<FieldTable>,
    coeffs: Vec<Elem>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(field: Arc<FieldTable>, mut coeffs: Vec<Elem>) -> Self {
        assert!(
            coeffs.iter().all(|&c| field.contains(c)),
            "coefficient outside the field"
        );
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: Arc<FieldTable>) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Arc<FieldTable>) -> Self {
        Polynomial {
            field,
            coeffs: vec![1],
        }
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(field: Arc<FieldTable>, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Polynomial { field, coeffs }
    }

    /// `x - r`.
    pub fn linear(field: Arc<FieldTable>, root: Elem) -> Self {
        let c = field.neg(root);
        Polynomial::new(field, vec![c, 1])
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    fn same_field(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Polynomial::new(self.field.clone(), out))
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Polynomial::new(
            self.field.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.same_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(self.field.clone()), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading())?;
        let mut quot = vec![0; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[i - dd] = t;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(t, d));
            }
        }
        rem.truncate(dd);
        Ok((
            Polynomial::new(self.field.clone(), quot),
            Polynomial::new(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> Result<bool, PolyError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading())
            .expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple `a b / gcd(a, b)`.
    pub fn lcm(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.divmod(&g)?;
        Ok(q.monic())
    }

    /// `f*(x) = f_0^{-1} x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(PolyError::ZeroConstantTerm);
        }
        let inv = self.field.inv(c0)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().rev().map(|&c| f.mul(c, inv)).collect();
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().map(|r| r == *self).unwrap_or(false)
    }

    /// Exponents `e` in `0..n` with `f(beta^e) = 0`, where `beta = A^((Q-1)/n)`
    /// for the generator `A` of `ext`. Coefficients are embedded first.
    pub fn root_exponents(&self, emb: &SubfieldEmbedding, n: usize) -> Vec<usize> {
        let ext = emb.ext();
        let step = (ext.order() as u64 - 1) / n as u64;
        (0..n)
            .filter(|&e| {
                let x = ext.exp(step * e as u64);
                let v = self
                    .coeffs
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| ext.add(ext.mul(acc, x), emb.embed(c)));
                v == 0
            })
            .collect()
    }
}

/// `m_s(x) = prod_{i in C_s} (x - beta^i)` with `beta = A^((Q-1)/n)`,
/// returned over the base field.
pub fn minimal_polynomial(
    s: usize,
    emb: &SubfieldEmbedding,
    n: usize,
    q: usize,
) -> Result<Polynomial, PolyError> {
    let coset = crate::cyclotomic::coset_of(s, n, q)?;
    minimal_polynomial_of_coset(s, &coset, emb, n)
}

pub(crate) fn minimal_polynomial_of_coset(
    s: usize,
    coset: &[usize],
    emb: &SubfieldEmbedding,
    n: usize,
) -> Result<Polynomial, PolyError> {
    let ext = emb.ext();
    let big = ext.order() as u64 - 1;
    if !big.is_multiple_of(n as u64) {
        return Err(PolyError::LengthMismatch {
            n,
            order_minus_one: big,
        });
    }
    let step = big / n as u64;
    // Expand over the extension field.
    let mut acc: Vec<Elem> = vec![1];
    for &i in coset {
        let root = ext.exp(step * i as u64);
        let neg_root = ext.neg(root);
        let mut next = vec![0; acc.len() + 1];
        for (j, &c) in acc.iter().enumerate() {
            next[j + 1] = ext.add(next[j + 1], c);
            next[j] = ext.add(next[j], ext.mul(c, neg_root));
        }
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            emb.restrict(c)
                .ok_or(PolyError::OutsideSubfield { s, value: c })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(emb.base().clone(), coeffs))
}

/// The irreducible factors `m_s` of `x^n - 1` over `GF(q)`, keyed by coset
/// leader.
pub fn factor_xn_minus_1(
    cosets: &CosetStructure,
    emb: &SubfieldEmbedding,
) -> Result<BTreeMap<usize, Polynomial>, PolyError> {
    let n = cosets.n();
    cosets
        .cosets()
        .iter()
        .map(|c| Ok((c[0], minimal_polynomial_of_coset(c[0], c, emb, n)?)))
        .collect()
}

/// Product of the given polynomials (one if empty).
pub fn product<'a>(
    field: &Arc<FieldTable>,
    polys: impl IntoIterator<Item = &'a Polynomial>,
) -> Result<Polynomial, PolyError> {
    polys
        .into_iter()
        .try_fold(Polynomial::one(field.clone()), |acc, p| acc.mul(p))
}
