//! Betti polynomials of the classes `δ_γ`, their decomposition into a
//! perverse part and a constant multiple, Euler characteristics, and the
//! intersection-cohomology polynomials of the Brill-Noether loci.
//!
//! The grading convention: `h(K) = Σ_ν dim H^ν · u^ν`, a shift by `[m]`
//! multiplies by `u^{-m}`. The two-dimensional graded piece `H₊` has
//! dimension `u + u^{-1}`; `H₋` is `2g`-dimensional in degree 0. For
//! `deg(γ) = r` the polynomial is
//!
//! ```text
//! h(δ_γ) = Σ_{deg α + deg β = r} m_{α β*}^γ · s_α(u, u^{-1}) · dim H₋^β
//! ```
//!
//! with `α` running over partitions with at most two rows.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{CurveContext, LaurentPoly};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_of, Partition};

/// `s_α(u, u^{-1})`: the quantum integer `[α_1 - α_2 + 1]_t` for shapes of
/// at most two rows, zero for three or more rows.
pub fn schur_eval_two(alpha: &Partition) -> LaurentPoly {
    if alpha.len() > 2 {
        return LaurentPoly::zero();
    }
    LaurentPoly::quantum_integer(alpha.part(0) - alpha.part(1) + 1)
}

/// `s_β(1, …, 1)` with `n` ones, by the hook content formula; zero when the
/// shape has more than `n` rows.
pub fn schur_dim(beta: &Partition, n: u32) -> BigUint {
    if beta.len() as u32 > n {
        return BigUint::zero();
    }
    let conj = beta.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in beta.parts().iter().enumerate() {
        for j in 0..row as usize {
            // content n + j - i is positive here since i < n
            num *= BigUint::from(n as usize + j - i);
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            den *= BigUint::from(arm + leg + 1);
        }
    }
    num / den
}

/// Betti polynomial of the constant perverse sheaf, `u^{-g}(1+u)^{2g}`.
pub fn betti_constant_sheaf(ctx: &CurveContext) -> LaurentPoly {
    LaurentPoly::h_constant(ctx)
}

type BettiKey = (Partition, u32);

fn betti_cache() -> &'static Mutex<HashMap<BettiKey, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<BettiKey, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Betti polynomial `h(δ_γ, t)` of the class indexed by `γ` on the Jacobian
/// of a genus-`g` curve. Palindromic with nonnegative coefficients.
pub fn betti_polynomial(gamma: &Partition, ctx: &CurveContext) -> LaurentPoly {
    let key = (gamma.clone(), ctx.genus());
    if let Some(h) = betti_cache().lock().unwrap().get(&key) {
        return h.clone();
    }
    let two_g = 2 * ctx.genus();
    let r = gamma.degree();
    let mut h = LaurentPoly::zero();
    for a in 0..=r {
        // two-row partitions of a, inside γ
        let lo = a.div_ceil(2);
        for a1 in lo..=a.min(gamma.first()) {
            let alpha = Partition::new([a1, a - a1]).unwrap();
            let weight = schur_eval_two(&alpha);
            for beta in partitions_of(r - a) {
                if beta.len() as u32 > two_g {
                    continue;
                }
                let m = lr_coefficient(&alpha, &beta.conjugate(), gamma);
                if m == 0 {
                    continue;
                }
                let dim = BigInt::from(schur_dim(&beta, two_g) * BigUint::from(m));
                h += &weight.scaled(&dim);
            }
        }
    }
    betti_cache().lock().unwrap().insert(key, h.clone());
    h
}

/// The decomposition `δ_α = ᵖδ_α + P_α(t)·δ_X` read off the Betti
/// polynomial: `h`, the constant multiplicity `P`, the perverse remainder
/// `h - P·h(δ_X)`, and the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub gamma: Partition,
    pub ctx: CurveContext,
    pub h: LaurentPoly,
    pub p_constant: LaurentPoly,
    pub h_perverse: LaurentPoly,
    pub euler: BigInt,
}

/// Splits `h(δ_α)` by Euclidean division by `h(δ_X)` and validates every
/// structural fact the decomposition must satisfy. A violation is a bug in
/// this crate, never a data error, and surfaces as
/// [`Error::InternalConsistency`].
pub fn perverse_decomposition(alpha: &Partition, ctx: &CurveContext) -> Result<BettiReport> {
    let h = betti_polynomial(alpha, ctx);
    let bug = |msg: String| Error::InternalConsistency(msg);
    if !h.is_palindromic() || !h.all_coeffs_nonnegative() {
        return Err(bug(format!("betti polynomial of {} is malformed: {}", alpha, h)));
    }
    let (p_constant, h_perverse) = h.divide_by_h_constant(ctx)?;
    let g = ctx.genus() as i64;
    let reconstructed = &(&p_constant * &betti_constant_sheaf(ctx)) + &h_perverse;
    if reconstructed != h {
        return Err(bug(format!("division identity fails for {}", alpha)));
    }
    if h_perverse.deg_plus().unwrap_or(0) > g - 1 || h_perverse.deg_minus().unwrap_or(0) < 1 - g {
        return Err(bug(format!("perverse part of {} exceeds degree g-1", alpha)));
    }
    if !h_perverse.is_palindromic() || !h_perverse.all_coeffs_nonnegative() {
        return Err(bug(format!("perverse part of {} is malformed", alpha)));
    }
    if !p_constant.is_palindromic() || !p_constant.all_coeffs_nonnegative() {
        return Err(bug(format!("constant multiplicity of {} is malformed", alpha)));
    }
    if !p_constant.is_zero() && p_constant.deg_plus().unwrap() > alpha.first() as i64 - g {
        return Err(bug(format!(
            "constant multiplicity of {} exceeds the degree estimate",
            alpha
        )));
    }
    Ok(BettiReport {
        gamma: alpha.clone(),
        ctx: *ctx,
        euler: h.evaluate_at_sign(-1),
        h,
        p_constant,
        h_perverse,
    })
}

/// Euler characteristic `Σ (-1)^ν dim H^ν(X, δ_α)`; coincides with the
/// dimension `s_{α*}(1^{2g-2})`.
pub fn euler_characteristic(alpha: &Partition, ctx: &CurveContext) -> BigInt {
    betti_polynomial(alpha, ctx).evaluate_at_sign(-1)
}

/// A Brill-Noether locus whose intersection cohomology this crate can
/// print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    /// `W_d`, the image of the `d`-th symmetric power, `1 <= d <= g-1`.
    W { d: u32 },
    /// The theta divisor, alias of `W_{g-1}`.
    Theta,
    /// The difference surface `W_r - W_r`, non-hyperelliptic, `r < g/2`.
    WMinusW { r: u32 },
}

/// Intersection-cohomology Betti polynomial of the locus.
///
/// For `W_d` this is `h(δ_d)` when the curve is not hyperelliptic and the
/// virtual difference `h(δ_d) - h(δ_{d-2})` when it is. For `W_r - W_r` it
/// is the perverse part of `δ_{(χ-r, r)}`.
pub fn ih_betti(locus: Locus, ctx: &CurveContext) -> Result<LaurentPoly> {
    let g = ctx.genus();
    match locus {
        Locus::Theta => ih_betti(Locus::W { d: g - 1 }, ctx),
        Locus::W { d } => {
            if d == 0 || d > g - 1 {
                return Err(Error::OutOfRange(format!(
                    "W_d needs 1 <= d <= g-1, got d={} at genus {}",
                    d, g
                )));
            }
            let h = betti_polynomial(&Partition::row(d), ctx);
            if !ctx.is_hyperelliptic() {
                return Ok(h);
            }
            let lower = if d >= 2 {
                betti_polynomial(&Partition::row(d - 2), ctx)
            } else {
                LaurentPoly::zero()
            };
            Ok(&h - &lower)
        }
        Locus::WMinusW { r } => {
            if ctx.is_hyperelliptic() {
                return Err(Error::Unsupported(
                    "W_r - W_r requires a non-hyperelliptic curve".into(),
                ));
            }
            if r == 0 || 2 * r >= g {
                return Err(Error::OutOfRange(format!(
                    "W_r - W_r needs 1 <= r < g/2, got r={} at genus {}",
                    r, g
                )));
            }
            let shape = Partition::new([ctx.chi() - r, r]).unwrap();
            Ok(perverse_decomposition(&shape, ctx)?.h_perverse)
        }
    }
}
