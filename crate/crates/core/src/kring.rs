//! The convolution ring of classes `δ_α` on the Jacobian, taken modulo the
//! constant class.
//!
//! The implemented fragment is the free module on the partitions with
//! largest part at most `χ - 1`, where `χ = 2g - 2`: a part above `χ` kills
//! the class, a part equal to `χ` strips away. Multiplication expands by
//! Littlewood-Richardson coefficients and renormalizes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{CurveContext, LaurentPoly};
use crate::lr::lr_expand_product;
use crate::partition::{partitions_of, Partition};

/// Normal form of an index partition: `None` when the class vanishes
/// (some part exceeds `χ`), otherwise the partition with all parts equal
/// to `χ` removed.
pub fn normal_form(gamma: &Partition, ctx: &CurveContext) -> Option<Partition> {
    let chi = ctx.chi();
    if gamma.first() > chi {
        return None;
    }
    Some(Partition::from_raw(
        gamma.parts().iter().copied().filter(|&p| p != chi).collect(),
    ))
}

/// Checks that `α` is a valid basis index: largest part at most `χ - 1`.
pub fn is_normal_form(alpha: &Partition, ctx: &CurveContext) -> bool {
    alpha.first() < ctx.chi()
}

/// The dual index `β = (χ - α_r, …, χ - α_1)`. Applying the map twice gives
/// back `α`; the input must be in normal form.
pub fn dual_partition(alpha: &Partition, ctx: &CurveContext) -> Result<Partition> {
    if !is_normal_form(alpha, ctx) {
        return Err(Error::NotNormalForm(alpha.to_string(), ctx.genus()));
    }
    let chi = ctx.chi();
    let parts: Vec<u32> = alpha.parts().iter().rev().map(|&p| chi - p).collect();
    Ok(Partition::from_raw(parts))
}

/// An element of the ring: a finite sum of normal-form classes with
/// Laurent-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    ctx: CurveContext,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl KClass {
    pub fn zero(ctx: CurveContext) -> Self {
        KClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class, the skyscraper at the origin.
    pub fn unit(ctx: CurveContext) -> Self {
        KClass::of(&Partition::empty(), ctx)
    }

    /// The class of `δ_γ`, already in normal form (possibly zero).
    pub fn of(gamma: &Partition, ctx: CurveContext) -> Self {
        let mut class = KClass::zero(ctx);
        if let Some(nf) = normal_form(gamma, &ctx) {
            class.terms.insert(nf, LaurentPoly::one());
        }
        class
    }

    pub fn ctx(&self) -> &CurveContext {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &Partition) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_scaled_key(&mut self, key: Partition, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_scaled_key(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: &LaurentPoly) -> KClass {
        let mut out = KClass::zero(self.ctx);
        for (k, c) in &self.terms {
            out.add_scaled_key(k.clone(), &(c * factor));
        }
        out
    }

    /// Convolution product: bilinear extension of the
    /// Littlewood-Richardson expansion followed by normal forms.
    pub fn convolve(&self, other: &KClass) -> Result<KClass> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = KClass::zero(self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca * cb;
                for (gamma, mult) in lr_expand_product(a, b) {
                    if let Some(nf) = normal_form(&gamma, &self.ctx) {
                        out.add_scaled_key(nf, &coeff.scaled(&BigInt::from(mult)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Duality involution: dual index on keys, `u ↔ u^{-1}` on coefficients.
    pub fn dual(&self) -> KClass {
        let mut out = KClass::zero(self.ctx);
        for (k, c) in &self.terms {
            let key = dual_partition(k, &self.ctx).expect("keys are kept in normal form");
            out.add_scaled_key(key, &c.reversed());
        }
        out
    }

    /// Class of the `r`-fold power of the curve under the Jacobian map:
    /// `Σ_{deg(α)=r} syt_count(α) · [α]`.
    pub fn curve_power(r: u32, ctx: CurveContext) -> Self {
        let mut out = KClass::zero(ctx);
        for alpha in partitions_of(r) {
            if let Some(nf) = normal_form(&alpha, &ctx) {
                let mult = BigInt::from(alpha.syt_count());
                out.add_scaled_key(nf, &LaurentPoly::constant(mult));
            }
        }
        out
    }

    /// Display/JSON order: ascending degree, then reverse-lexicographic
    /// within a degree (`(3)` before `(2,1)` before `(1,1,1)`).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.parts().cmp(a.parts()))
        });
        v
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, coeff) in self.sorted_terms() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let single_term = coeff.terms().count() == 1 && coeff.deg_plus() == Some(0);
            if single_term {
                write!(f, "{}:{}", key.bracket(), coeff)?;
            } else {
                write!(f, "{}:({})", key.bracket(), coeff)?;
            }
        }
        Ok(())
    }
}
