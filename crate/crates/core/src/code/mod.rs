//! Cyclic codes described by their defining sets, and the constructions
//! built on top of them.

mod descriptor;
mod extended;
mod families;

use std::sync::Arc;

use thiserror::Error;

use crate::cyclotomic::{multiplicative_order, CosetStructure, CyclotomicError, IndexSet};
use crate::field::{
    prime_power, Elem, FieldError, FieldTable, SubfieldEmbedding, DEFAULT_TABLE_BUDGET,
};
use crate::linalg::Matrix;
use crate::poly::{factor_xn_minus_1, PolyError, Polynomial};

pub use descriptor::{CodeDescriptor, ExtendedDescriptor};
pub use extended::{extend, ExtendedCode};
pub use families::{
    bch, bch_in, complement, dual, grm, grm_in, is_subcode, pgrm, pgrm_in, pgrm_order_split,
    reversible_grm, reversible_grm_in, Family,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("the construction yields the zero code (dimension 0)")]
    ZeroDimension,
    #[error("defining set is not a union of {q}-cyclotomic cosets modulo {n}")]
    NotUnionOfCosets { q: usize, n: usize },
    #[error("codes live in different ambient spaces")]
    ContextMismatch,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

/// Everything shared by the cyclic codes of one length over one field:
/// the base field `GF(q)`, the splitting field `GF(q^m)`, the cosets and the
/// minimal polynomial of every coset.
#[derive(Debug)]
pub struct CodeContext {
    q: usize,
    n: usize,
    m: u32,
    embedding: SubfieldEmbedding,
    cosets: CosetStructure,
    minimal: Vec<Polynomial>,
}

impl CodeContext {
    /// Length `n = q^m - 1` over `GF(q)`.
    pub fn primitive(q: usize, m: u32) -> Result<Arc<Self>, CodeError> {
        Self::primitive_with_budget(q, m, DEFAULT_TABLE_BUDGET)
    }

    pub fn primitive_with_budget(q: usize, m: u32, budget: u64) -> Result<Arc<Self>, CodeError> {
        if m == 0 {
            return Err(CodeError::InvalidParameters("m must be at least 1".into()));
        }
        let n = (q as u64).checked_pow(m).filter(|&v| v <= budget).ok_or(
            FieldError::BudgetExceeded {
                p: q as u64,
                k: m,
                budget,
            },
        )? - 1;
        Self::with_budget(q, n as usize, budget)
    }

    /// Any length `n` coprime to `q`; the splitting field is `GF(q^ord_n(q))`.
    pub fn new(q: usize, n: usize) -> Result<Arc<Self>, CodeError> {
        Self::with_budget(q, n, DEFAULT_TABLE_BUDGET)
    }

    pub fn with_budget(q: usize, n: usize, budget: u64) -> Result<Arc<Self>, CodeError> {
        let (p, s) = prime_power(q as u64).ok_or(FieldError::NotPrimePower(q as u64))?;
        let m = multiplicative_order(q, n)?;
        let base = Arc::new(FieldTable::with_budget(p as u32, s, budget)?);
        let ext = if m == 1 {
            base.clone()
        } else {
            Arc::new(FieldTable::with_budget(p as u32, s * m, budget)?)
        };
        Self::with_fields(base, ext, n)
    }

    /// Uses caller-supplied tables, e.g. to compare two choices of primitive
    /// element.
    pub fn with_fields(
        base: Arc<FieldTable>,
        ext: Arc<FieldTable>,
        n: usize,
    ) -> Result<Arc<Self>, CodeError> {
        let q = base.order() as usize;
        let m = multiplicative_order(q, n)?;
        if ext.degree() != base.degree() * m {
            return Err(CodeError::InvalidParameters(format!(
                "splitting field of x^{n} - 1 over GF({q}) has degree {m}, got GF({})",
                ext.order()
            )));
        }
        let embedding = SubfieldEmbedding::new(base, ext)?;
        let cosets = CosetStructure::new(n, q)?;
        let minimal = factor_xn_minus_1(&cosets, &embedding)?
            .into_values()
            .collect();
        Ok(Arc::new(CodeContext {
            q,
            n,
            m,
            embedding,
            cosets,
            minimal,
        }))
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of the splitting field over `GF(q)`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_primitive_length(&self) -> bool {
        (self.q as u64).pow(self.m) - 1 == self.n as u64
    }

    pub fn base_field(&self) -> &Arc<FieldTable> {
        self.embedding.base()
    }

    pub fn ext_field(&self) -> &Arc<FieldTable> {
        self.embedding.ext()
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    pub fn cosets(&self) -> &CosetStructure {
        &self.cosets
    }

    /// `m_s(x)` for any exponent `s` (looked up through its coset).
    pub fn minimal_polynomial(&self, s: usize) -> &Polynomial {
        &self.minimal[self.cosets.coset_index(s % self.n)]
    }

    /// The canonical factors of `x^n - 1`, in leader order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.cosets.leaders().into_iter().zip(self.minimal.iter())
    }

    /// `prod m_s(x)` over the coset leaders `s` in `set`.
    pub fn generator_for(&self, set: &IndexSet) -> Result<Polynomial, CodeError> {
        if set.n() != self.n || set.iter().any(|a| a >= self.n) {
            return Err(CodeError::InvalidParameters(
                "defining set outside 0..n".into(),
            ));
        }
        if !self.cosets.is_union_of_cosets(set) {
            return Err(CodeError::NotUnionOfCosets {
                q: self.q,
                n: self.n,
            });
        }
        let field = self.base_field();
        let mut acc = Polynomial::one(field.clone());
        for s in set.iter().filter(|&s| self.cosets.leader_of(s) == s) {
            acc = acc.mul(self.minimal_polynomial(s))?;
        }
        Ok(acc)
    }

    fn same_space(&self, other: &CodeContext) -> bool {
        self.n == other.n
            && self.q == other.q
            && **self.base_field() == **other.base_field()
            && **self.ext_field() == **other.ext_field()
    }
}

/// A linear code given by a generator matrix over its base field.
pub trait LinearCode {
    fn base_field(&self) -> &Arc<FieldTable>;
    fn length(&self) -> usize;
    fn dimension(&self) -> usize;
    /// A `k x n` matrix of full row rank.
    fn generator_matrix(&self) -> Matrix;
    /// True when every cyclic shift of a codeword is again a codeword.
    fn is_cyclic(&self) -> bool {
        false
    }
}

/// A cyclic code of length `n` over `GF(q)` with defining set `T`: the
/// exponents `a` for which `beta^a` is a root of the generator.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    ctx: Arc<CodeContext>,
    family: Family,
    defining_set: IndexSet,
    generator: Polynomial,
    trivial: bool,
}

impl PartialEq for CyclicCode {
    /// Two codes are equal when they are the same subspace; the family label
    /// is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_space(&other.ctx)
            && self.defining_set == other.defining_set
            && self.generator == other.generator
    }
}

impl CyclicCode {
    pub fn from_defining_set(
        ctx: &Arc<CodeContext>,
        family: Family,
        defining_set: IndexSet,
    ) -> Result<Self, CodeError> {
        let generator = ctx.generator_for(&defining_set)?;
        Ok(CyclicCode {
            ctx: ctx.clone(),
            family,
            defining_set,
            generator,
            trivial: false,
        })
    }

    pub(crate) fn flag_trivial(mut self, trivial: bool) -> Self {
        self.trivial = trivial;
        self
    }

    pub fn context(&self) -> &Arc<CodeContext> {
        &self.ctx
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn q(&self) -> usize {
        self.ctx.q
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn m(&self) -> u32 {
        self.ctx.m
    }

    /// `k = n - |T|`.
    pub fn dimension(&self) -> usize {
        self.ctx.n - self.defining_set.len()
    }

    pub fn defining_set(&self) -> &IndexSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    /// Flagged by constructions whose parameters give a degenerate member of
    /// the family.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn check_polynomial(&self) -> Polynomial {
        let xn = Polynomial::x_n_minus_1(self.ctx.base_field().clone(), self.ctx.n);
        let (h, r) = xn.divmod(&self.generator).expect("generator is nonzero");
        debug_assert!(r.is_zero());
        h
    }

    /// Whether `1` is a root of the generator.
    pub fn is_even_like(&self) -> bool {
        self.defining_set.contains(0)
    }

    /// Reversible iff the defining set is closed under negation.
    pub fn is_reversible(&self) -> bool {
        self.defining_set.negate() == self.defining_set
    }

    /// Codeword `c(x) = u(x) g(x)` for a message of length `k`.
    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        assert_eq!(message.len(), self.dimension(), "message length");
        let f = self.ctx.base_field().clone();
        let u = Polynomial::new(f, message.to_vec());
        let c = u.mul(&self.generator).expect("same field");
        let mut out = c.coeffs().to_vec();
        out.resize(self.ctx.n, 0);
        out
    }

    /// Whether a word lies in the code (`g` divides `c(x)`).
    pub fn contains(&self, word: &[Elem]) -> bool {
        let f = self.ctx.base_field().clone();
        let c = Polynomial::new(f, word.to_vec());
        self.generator.divides(&c).expect("generator is nonzero")
    }
}

impl LinearCode for CyclicCode {
    fn base_field(&self) -> &Arc<FieldTable> {
        self.ctx.base_field()
    }

    fn length(&self) -> usize {
        self.ctx.n
    }

    fn dimension(&self) -> usize {
        CyclicCode::dimension(self)
    }

    /// Row `i` holds the coefficients of `x^i g(x)`.
    fn generator_matrix(&self) -> Matrix {
        let n = self.ctx.n;
        let k = CyclicCode::dimension(self);
        let g = self.generator.coeffs();
        let mut m = Matrix::zeros(self.ctx.base_field().clone(), k, n);
        for i in 0..k {
            m.row_mut(i)[i..i + g.len()].copy_from_slice(g);
        }
        m
    }

    fn is_cyclic(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_minimal_polynomials_multiply_to_xn_minus_1() {
        for (q, m) in [(2, 4), (3, 3), (4, 2), (5, 2)] {
            let ctx = CodeContext::primitive(q, m).unwrap();
            let f = ctx.base_field().clone();
            let prod = crate::poly::product(&f, ctx.factors().map(|(_, p)| p)).unwrap();
            assert_eq!(prod, Polynomial::x_n_minus_1(f, ctx.n()));
        }
    }

    #[test]
    fn generator_matrix_rows_are_shifts() {
        let ctx = CodeContext::primitive(2, 4).unwrap();
        let c = CyclicCode::from_defining_set(
            &ctx,
            Family::Custom { q: 2, n: 15 },
            IndexSet::new(15, [1, 2, 4, 8]).unwrap(),
        )
        .unwrap();
        let g = c.generator_matrix();
        assert_eq!(g.rows(), 11);
        for i in 1..11 {
            let mut shifted = [0; 15];
            shifted[i..].copy_from_slice(&g.row(0)[..15 - i]);
            assert_eq!(g.row(i), &shifted[..]);
        }
        assert_eq!(g.rank(), 11);
        for r in 0..11 {
            assert!(c.contains(g.row(r)));
        }
    }

    #[test]
    fn zero_dimension_matrix_is_empty() {
        let ctx = CodeContext::primitive(2, 3).unwrap();
        let all = IndexSet::new(7, 0..7).unwrap();
        let c = CyclicCode::from_defining_set(&ctx, Family::Custom { q: 2, n: 7 }, all).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(c.generator_matrix().rows(), 0);
    }

    #[test]
    fn rejects_non_coset_sets() {
        let ctx = CodeContext::primitive(2, 4).unwrap();
        let err = CyclicCode::from_defining_set(
            &ctx,
            Family::Custom { q: 2, n: 15 },
            IndexSet::new(15, [1, 2]).unwrap(),
        )
        .unwrap_err();
        assert_eq!(err, CodeError::NotUnionOfCosets { q: 2, n: 15 });
    }

    #[test]
    fn encode_lands_in_code() {
        let ctx = CodeContext::primitive(3, 2).unwrap();
        let t = IndexSet::new(8, [1, 3]).unwrap();
        let c = CyclicCode::from_defining_set(&ctx, Family::Custom { q: 3, n: 8 }, t).unwrap();
        let word = c.encode(&[1, 2, 0, 1, 1, 2]);
        assert!(c.contains(&word));
        let mut bad = word.clone();
        bad[0] = (bad[0] + 1) % 3;
        assert!(!c.contains(&bad));
    }
}
