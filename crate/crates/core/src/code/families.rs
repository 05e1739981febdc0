use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{CodeContext, CodeError, CyclicCode};
use crate::cyclotomic::{index_set, q_weight, IndexSet};
use crate::poly::Polynomial;

/// How a code was built. Serialised with a `kind` tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Grm {
        q: usize,
        m: u32,
        h: u32,
    },
    Pgrm {
        q: usize,
        m: u32,
        l: u32,
    },
    Bch {
        q: usize,
        n: usize,
        delta: usize,
        b: usize,
    },
    ReversibleGrm {
        q: usize,
        m: u32,
        h: u32,
    },
    Dual {
        of: Box<Family>,
    },
    Complement {
        of: Box<Family>,
    },
    /// A code given only by its defining set.
    Custom {
        q: usize,
        n: usize,
    },
}

impl Family {
    /// Short name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Grm { .. } => "grm",
            Family::Pgrm { .. } => "pgrm",
            Family::Bch { .. } => "bch",
            Family::ReversibleGrm { .. } => "reversible_grm",
            Family::Dual { .. } => "dual",
            Family::Complement { .. } => "complement",
            Family::Custom { .. } => "custom",
        }
    }

    /// Rebuilds the code from its parameters with default field tables.
    /// `Custom` codes carry no recipe and are rejected.
    pub fn build(&self) -> Result<CyclicCode, CodeError> {
        match *self {
            Family::Grm { q, m, h } => grm(q, m, h),
            Family::Pgrm { q, m, l } => pgrm(q, m, l),
            Family::Bch { q, n, delta, b } => bch(q, n, delta, b),
            Family::ReversibleGrm { q, m, h } => reversible_grm(q, m, h),
            Family::Dual { ref of } => Ok(dual(&of.build()?)),
            Family::Complement { ref of } => complement(&of.build()?),
            Family::Custom { .. } => Err(CodeError::InvalidParameters(
                "a custom code cannot be rebuilt from its family alone".into(),
            )),
        }
    }

    /// Same as [`Family::build`] but inside an existing context.
    pub fn build_in(&self, ctx: &Arc<CodeContext>) -> Result<CyclicCode, CodeError> {
        match *self {
            Family::Grm { q, m, h } => {
                check_primitive(ctx, q, m)?;
                grm_in(ctx, h)
            }
            Family::Pgrm { q, m, l } => {
                check_primitive(ctx, q, m)?;
                pgrm_in(ctx, l)
            }
            Family::Bch { q, n, delta, b } => {
                if ctx.q() != q || ctx.n() != n {
                    return Err(CodeError::ContextMismatch);
                }
                bch_in(ctx, delta, b)
            }
            Family::ReversibleGrm { q, m, h } => {
                check_primitive(ctx, q, m)?;
                reversible_grm_in(ctx, h)
            }
            Family::Dual { ref of } => Ok(dual(&of.build_in(ctx)?)),
            Family::Complement { ref of } => complement(&of.build_in(ctx)?),
            Family::Custom { .. } => Err(CodeError::InvalidParameters(
                "a custom code cannot be rebuilt from its family alone".into(),
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grm { q, m, h } => write!(f, "GRM({q},{m},{h})"),
            Family::Pgrm { q, m, l } => write!(f, "PGRM_{q}({l},{m})"),
            Family::Bch { q, n, delta, b } => write!(f, "BCH({q},{n},{delta},{b})"),
            Family::ReversibleGrm { q, m, h } => write!(f, "revGRM({q},{m},{h})"),
            Family::Dual { of } => write!(f, "dual({of})"),
            Family::Complement { of } => write!(f, "complement({of})"),
            Family::Custom { q, n } => write!(f, "cyclic({q},{n})"),
        }
    }
}

fn check_primitive(ctx: &CodeContext, q: usize, m: u32) -> Result<(), CodeError> {
    if ctx.q() != q || ctx.m() != m || !ctx.is_primitive_length() {
        return Err(CodeError::ContextMismatch);
    }
    Ok(())
}

fn require_primitive(ctx: &CodeContext) -> Result<(), CodeError> {
    if !ctx.is_primitive_length() {
        return Err(CodeError::InvalidParameters(format!(
            "length {} is not q^m - 1 for q = {}",
            ctx.n(),
            ctx.q()
        )));
    }
    Ok(())
}

/// `GRM(q, m, h)`: defining set `I(q, m, h)`.
pub fn grm(q: usize, m: u32, h: u32) -> Result<CyclicCode, CodeError> {
    if m < 2 {
        return Err(CodeError::InvalidParameters(format!(
            "m = {m} must be at least 2"
        )));
    }
    if h < 1 || h > m {
        return Err(CodeError::InvalidParameters(format!(
            "h = {h} must satisfy 1 <= h <= m = {m}"
        )));
    }
    grm_in(&CodeContext::primitive(q, m)?, h)
}

pub fn grm_in(ctx: &Arc<CodeContext>, h: u32) -> Result<CyclicCode, CodeError> {
    require_primitive(ctx)?;
    let (q, m) = (ctx.q(), ctx.m());
    if m < 2 || h < 1 || h > m {
        return Err(CodeError::InvalidParameters(format!(
            "GRM needs m >= 2 and 1 <= h <= m, got m = {m}, h = {h}"
        )));
    }
    let t = index_set(q as u64, m, h)?;
    Ok(CyclicCode::from_defining_set(ctx, Family::Grm { q, m, h }, t)?.flag_trivial(h == m))
}

/// Splits `l = l1 (q - 1) + l0` with `0 <= l0 <= q - 2`; returns `(l0, l1)`.
pub fn pgrm_order_split(q: usize, l: u32) -> (u32, u32) {
    let r = q as u32 - 1;
    (l % r, l / r)
}

/// `PGRM_q(l, m)`: defining set `{1 <= a <= n-1 : q_weight(a) < (q-1)m - l}`.
pub fn pgrm(q: usize, m: u32, l: u32) -> Result<CyclicCode, CodeError> {
    if m < 1 {
        return Err(CodeError::InvalidParameters("m must be at least 1".into()));
    }
    check_pgrm_order(q, m, l)?;
    pgrm_in(&CodeContext::primitive(q, m)?, l)
}

fn check_pgrm_order(q: usize, m: u32, l: u32) -> Result<(), CodeError> {
    let top = m as u64 * (q as u64 - 1);
    if l as u64 + 1 > top {
        return Err(CodeError::InvalidParameters(format!(
            "order l = {l} must satisfy 0 <= l <= m(q-1) - 1 = {}",
            top as i64 - 1
        )));
    }
    Ok(())
}

pub fn pgrm_in(ctx: &Arc<CodeContext>, l: u32) -> Result<CyclicCode, CodeError> {
    require_primitive(ctx)?;
    let (q, m, n) = (ctx.q(), ctx.m(), ctx.n());
    check_pgrm_order(q, m, l)?;
    let bound = (q as u32 - 1) * m - l;
    let t = IndexSet::new(
        n,
        (1..n).filter(|&a| q_weight(a as u64, q as u64, m) < bound),
    )?;
    CyclicCode::from_defining_set(ctx, Family::Pgrm { q, m, l }, t)
}

/// BCH code with designed distance `delta` and first root `beta^b`.
pub fn bch(q: usize, n: usize, delta: usize, b: usize) -> Result<CyclicCode, CodeError> {
    check_bch(n, delta)?;
    bch_in(&CodeContext::new(q, n)?, delta, b)
}

fn check_bch(n: usize, delta: usize) -> Result<(), CodeError> {
    if delta < 2 || delta > n {
        return Err(CodeError::InvalidParameters(format!(
            "designed distance {delta} must satisfy 2 <= delta <= n = {n}"
        )));
    }
    Ok(())
}

pub fn bch_in(ctx: &Arc<CodeContext>, delta: usize, b: usize) -> Result<CyclicCode, CodeError> {
    let n = ctx.n();
    check_bch(n, delta)?;
    let b = b % n;
    let cosets = ctx.cosets();
    let mut members = Vec::new();
    for i in 0..delta - 1 {
        members.extend_from_slice(cosets.coset_containing((b + i) % n));
    }
    let t = IndexSet::new(n, members)?;
    let family = Family::Bch {
        q: ctx.q(),
        n,
        delta,
        b,
    };
    CyclicCode::from_defining_set(ctx, family, t)
}

/// The dual code, with defining set `-(T^c)`.
pub fn dual(c: &CyclicCode) -> CyclicCode {
    let t = c.defining_set().complement_in_n().negate();
    let family = Family::Dual {
        of: Box::new(c.family().clone()),
    };
    CyclicCode::from_defining_set(c.context(), family, t)
        .expect("negated complement of a coset union is a coset union")
}

/// The code generated by the check polynomial `h = (x^n - 1)/g`.
pub fn complement(c: &CyclicCode) -> Result<CyclicCode, CodeError> {
    let t = c.defining_set().complement_in_n();
    let family = Family::Complement {
        of: Box::new(c.family().clone()),
    };
    let out = CyclicCode::from_defining_set(c.context(), family, t)?;
    if *out.generator() != c.check_polynomial().monic() {
        return Err(CodeError::Inconsistent(
            "complement generator differs from the check polynomial".into(),
        ));
    }
    Ok(out)
}

/// Reversible code with defining set `{0} ∪ I(q,m,h) ∪ -I(q,m,h)`.
pub fn reversible_grm(q: usize, m: u32, h: u32) -> Result<CyclicCode, CodeError> {
    if m < 2 {
        return Err(CodeError::InvalidParameters(format!(
            "m = {m} must be at least 2"
        )));
    }
    if h < 1 || h > m {
        return Err(CodeError::InvalidParameters(format!(
            "h = {h} must satisfy 1 <= h <= m = {m}"
        )));
    }
    reversible_grm_in(&CodeContext::primitive(q, m)?, h)
}

pub fn reversible_grm_in(ctx: &Arc<CodeContext>, h: u32) -> Result<CyclicCode, CodeError> {
    require_primitive(ctx)?;
    let (q, m) = (ctx.q(), ctx.m());
    if m < 2 || h < 1 || h > m {
        return Err(CodeError::InvalidParameters(format!(
            "reversible GRM needs m >= 2 and 1 <= h <= m, got m = {m}, h = {h}"
        )));
    }
    let i = index_set(q as u64, m, h)?;
    let t = i.union(&i.negate()).with(0);
    if t.len() == ctx.n() {
        return Err(CodeError::ZeroDimension);
    }
    let code = CyclicCode::from_defining_set(ctx, Family::ReversibleGrm { q, m, h }, t)?
        .flag_trivial(h > m.div_ceil(2));

    // (x - 1) lcm(g, g*) must agree with the coset product.
    let g = ctx.generator_for(&i)?;
    let field = ctx.base_field().clone();
    let x_minus_1 = Polynomial::new(field.clone(), vec![field.neg(1), 1]);
    let expected = x_minus_1.mul(&g.lcm(&g.reciprocal()?)?)?;
    if expected != *code.generator() {
        return Err(CodeError::Inconsistent(
            "reversible generator differs from (x-1) lcm(g, g*)".into(),
        ));
    }
    Ok(code)
}

/// Whether `a` is a subcode of `b`. Compares defining sets and checks
/// generator divisibility; a disagreement is reported as an error.
pub fn is_subcode(a: &CyclicCode, b: &CyclicCode) -> Result<bool, CodeError> {
    if !a.context().same_space(b.context()) {
        return Err(CodeError::ContextMismatch);
    }
    let by_set = b.defining_set().is_subset(a.defining_set());
    let by_poly = b.generator().divides(a.generator())?;
    if by_set != by_poly {
        return Err(CodeError::Inconsistent(format!(
            "subcode test disagrees: sets say {by_set}, generators say {by_poly}"
        )));
    }
    Ok(by_set)
}

impl CyclicCode {
    /// LCD check: the dual and the complement have the same defining set,
    /// and `gcd(g, h*) = 1`.
    pub fn is_lcd(&self) -> bool {
        let d = self.defining_set().complement_in_n().negate();
        let c = self.defining_set().complement_in_n();
        if d != c {
            return false;
        }
        let h = self.check_polynomial();
        match h.reciprocal() {
            Ok(hs) => self
                .generator()
                .gcd(&hs)
                .map(|g| g.degree() == Some(0))
                .unwrap_or(false),
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::LinearCode;
    use crate::cyclotomic::index_set_complement;

    #[test]
    fn grm_examples() {
        let c = grm(3, 3, 1).unwrap();
        assert_eq!((c.n(), c.dimension()), (26, 20));
        let c = grm(2, 4, 1).unwrap();
        assert_eq!((c.n(), c.dimension()), (15, 11));
        assert_eq!(c.generator(), c.context().minimal_polynomial(1));
        assert_eq!(grm(3, 4, 3).unwrap().dimension(), 16);
        let t = grm(3, 3, 3).unwrap();
        assert!(t.is_trivial());
        assert_eq!(t.dimension(), 1);
        assert!(grm(3, 1, 1).is_err());
        assert!(grm(3, 3, 0).is_err());
        assert!(grm(3, 3, 4).is_err());
        assert!(grm(6, 2, 1).is_err());
    }

    #[test]
    fn generator_invariants() {
        for c in [
            grm(3, 3, 2).unwrap(),
            pgrm(4, 2, 3).unwrap(),
            bch(2, 21, 5, 1).unwrap(),
            reversible_grm(3, 3, 1).unwrap(),
        ] {
            let g = c.generator();
            assert_eq!(g.degree(), Some(c.defining_set().len()));
            assert!(g.is_monic());
            let xn = Polynomial::x_n_minus_1(c.base_field().clone(), c.n());
            assert!(g.divides(&xn).unwrap());
            let roots = g.root_exponents(c.context().embedding(), c.n());
            assert_eq!(roots, c.defining_set().members());
        }
    }

    #[test]
    fn pgrm_examples() {
        let c = pgrm(2, 4, 1).unwrap();
        assert_eq!(c.dimension(), 5);
        for (q, m) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
            let c = pgrm(q, m, 0).unwrap();
            assert_eq!(c.dimension(), 1);
        }
        assert!(pgrm(3, 3, 6).is_err());
        assert!(pgrm(3, 3, 5).is_ok());
        assert_eq!(pgrm_order_split(4, 7), (1, 2));
        assert_eq!(pgrm_order_split(2, 3), (0, 3));
    }

    #[test]
    fn pgrm_inside_grm() {
        for (q, m) in [(2u32, 4u32), (3, 3), (4, 2), (3, 2)] {
            for h in 1..m {
                let l = (m - h) * (q - 1) - 1;
                let p = pgrm(q as usize, m, l).unwrap();
                let g = grm(q as usize, m, h).unwrap();
                assert!(is_subcode(&p, &g).unwrap(), "q={q} m={m} h={h}");
            }
        }
    }

    #[test]
    fn bch_examples() {
        let c = bch(2, 15, 5, 1).unwrap();
        assert_eq!(c.dimension(), 7);
        assert_eq!(c.defining_set().len(), 8);
        let c = bch(3, 26, 2, 1).unwrap();
        assert_eq!(c.generator(), c.context().minimal_polynomial(1));
        let cover = bch(3, 26, 4, 1).unwrap();
        assert_eq!(cover.defining_set(), grm(3, 3, 1).unwrap().defining_set());
        assert!(bch(2, 15, 1, 1).is_err());
        assert!(bch(2, 15, 16, 1).is_err());
    }

    #[test]
    fn dual_and_complement() {
        let c = grm(3, 3, 1).unwrap();
        let d = dual(&c);
        assert_eq!(d.dimension(), 6);
        assert_eq!(dual(&d), c);
        assert_eq!(dual(&grm(2, 4, 2).unwrap()).dimension(), 10);
        let comp = complement(&c).unwrap();
        assert_eq!(comp.dimension(), 6);

        let ctx = CodeContext::primitive(2, 3).unwrap();
        let zero = CyclicCode::from_defining_set(
            &ctx,
            Family::Custom { q: 2, n: 7 },
            IndexSet::new(7, 0..7).unwrap(),
        )
        .unwrap();
        assert_eq!(complement(&zero).unwrap().dimension(), 7);
    }

    #[test]
    fn binary_dual_is_even_subcode() {
        for m in 3..=7u32 {
            for h in 1..m - 1 {
                let lhs = index_set(2, m, m - 1 - h).unwrap().with(0);
                let rhs = index_set_complement(2, m, h).unwrap().negate();
                assert_eq!(lhs, rhs, "m={m} h={h}");
            }
        }
    }

    #[test]
    fn dual_grm_inside_grm() {
        for (q, m) in [(2usize, 4u32), (3, 3), (4, 3), (5, 2)] {
            for h in 1..m - 1 {
                let d = dual(&grm(q, m, h).unwrap());
                let g = grm(q, m, m - 1 - h).unwrap();
                assert!(is_subcode(&d, &g).unwrap());
                if q > 2 {
                    assert!(d.dimension() < g.dimension());
                }
            }
        }
    }

    #[test]
    fn grm_chain_and_bch_cover() {
        for (q, m) in [(2usize, 5u32), (3, 3), (4, 2)] {
            for h in 2..=m {
                assert!(is_subcode(&grm(q, m, h).unwrap(), &grm(q, m, h - 1).unwrap()).unwrap());
            }
            for h in 1..m {
                let n = q.pow(m) - 1;
                let delta = (q.pow(h + 1) - 1) / (q - 1);
                let b = bch(q, n, delta, 1).unwrap();
                assert!(is_subcode(&grm(q, m, h).unwrap(), &b).unwrap());
            }
        }
    }

    #[test]
    fn reversible_examples() {
        assert_eq!(reversible_grm(2, 4, 1).unwrap().dimension(), 6);
        assert_eq!(reversible_grm(5, 2, 1).unwrap().dimension(), 9);
        assert_eq!(reversible_grm(4, 3, 2).unwrap().dimension(), 8);
        assert_eq!(reversible_grm(2, 6, 2).unwrap().dimension(), 20);
        assert_eq!(
            reversible_grm(2, 4, 2).unwrap_err(),
            CodeError::ZeroDimension
        );
        assert_eq!(
            reversible_grm(2, 5, 2).unwrap_err(),
            CodeError::ZeroDimension
        );
        for (q, m, h) in [(3, 3, 1), (3, 4, 2), (4, 3, 2), (2, 6, 2)] {
            let c = reversible_grm(q, m, h).unwrap();
            assert!(c.is_reversible());
            assert!(c.generator().is_self_reciprocal());
            assert!(c.is_lcd());
            let mut roots = c.generator().root_exponents(c.context().embedding(), c.n());
            let negated: Vec<usize> = roots.iter().map(|&e| (c.n() - e) % c.n()).collect();
            roots.sort();
            let mut negated = negated;
            negated.sort();
            assert_eq!(roots, negated);
        }
        assert!(!grm(3, 3, 1).unwrap().is_lcd());
    }

    #[test]
    fn family_round_trip() {
        let fam = Family::Dual {
            of: Box::new(Family::Grm { q: 3, m: 3, h: 1 }),
        };
        let json = serde_json::to_string(&fam).unwrap();
        let back: Family = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fam);
        assert_eq!(back.build().unwrap(), dual(&grm(3, 3, 1).unwrap()));
        assert_eq!(fam.to_string(), "dual(GRM(3,3,1))");
    }

    #[test]
    fn cross_space_subcode_is_rejected() {
        let a = grm(3, 3, 1).unwrap();
        let b = grm(2, 4, 1).unwrap();
        assert_eq!(is_subcode(&a, &b).unwrap_err(), CodeError::ContextMismatch);
    }
}
