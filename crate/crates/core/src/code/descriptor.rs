use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{extend, CodeContext, CodeError, CyclicCode, ExtendedCode, Family};
use crate::cyclotomic::IndexSet;
use crate::field::{FieldDescriptor, FieldTable, DEFAULT_TABLE_BUDGET};

/// JSON form of a constructed code. Carries the field moduli so that a
/// rebuild uses exactly the same primitive element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub q: usize,
    pub m: u32,
    pub n: usize,
    pub family: String,
    pub params: Family,
    pub defining_set: Vec<usize>,
    /// Ascending coefficients of the monic generator.
    pub generator: Vec<u32>,
    pub k: usize,
    pub trivial: bool,
    pub base_field: FieldDescriptor,
    pub ext_field: FieldDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extended: Option<ExtendedDescriptor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedDescriptor {
    pub length: usize,
    pub defining_set: Vec<usize>,
}

impl CodeDescriptor {
    pub fn of(c: &CyclicCode) -> Self {
        let ctx = c.context();
        CodeDescriptor {
            q: c.q(),
            m: c.m(),
            n: c.n(),
            family: c.family().name().to_string(),
            params: c.family().clone(),
            defining_set: c.defining_set().members().to_vec(),
            generator: c.generator().coeffs().to_vec(),
            k: c.dimension(),
            trivial: c.is_trivial(),
            base_field: ctx.base_field().descriptor(),
            ext_field: ctx.ext_field().descriptor(),
            extended: None,
        }
    }

    pub fn of_extended(e: &ExtendedCode) -> Self {
        let mut d = Self::of(e.base());
        d.extended = Some(ExtendedDescriptor {
            length: e.base().n() + 1,
            defining_set: e.defining_set().members().to_vec(),
        });
        d
    }

    /// Reconstructs the cyclic code and checks that every recorded field
    /// matches. The extension, if present, is verified as well.
    pub fn rebuild(&self) -> Result<CyclicCode, CodeError> {
        let base = Arc::new(FieldTable::with_modulus(
            self.base_field.p,
            self.base_field.modulus.clone(),
            DEFAULT_TABLE_BUDGET,
        )?);
        let ext = Arc::new(FieldTable::with_modulus(
            self.ext_field.p,
            self.ext_field.modulus.clone(),
            DEFAULT_TABLE_BUDGET,
        )?);
        let ctx = CodeContext::with_fields(base, ext, self.n)?;
        let code = match self.params {
            Family::Custom { .. } => {
                let t = IndexSet::new(self.n, self.defining_set.iter().copied())?;
                CyclicCode::from_defining_set(&ctx, self.params.clone(), t)?
                    .flag_trivial(self.trivial)
            }
            _ => self.params.build_in(&ctx)?,
        };
        let check = Self::of(&code);
        let same = check.q == self.q
            && check.m == self.m
            && check.family == self.family
            && check.defining_set == self.defining_set
            && check.generator == self.generator
            && check.k == self.k
            && check.trivial == self.trivial;
        if !same {
            return Err(CodeError::Inconsistent(
                "descriptor does not match the rebuilt code".into(),
            ));
        }
        if let Some(x) = &self.extended {
            let e = extend(&code);
            if x.length != code.n() + 1 || x.defining_set != e.defining_set().members() {
                return Err(CodeError::Inconsistent(
                    "extended descriptor does not match".into(),
                ));
            }
        }
        Ok(code)
    }
}
