//! The invariant suite behind `selftest` and the acceptance test target.
//!
//! Each check returns `Ok(())` or the first counterexample as text. The
//! quick budget trims degree ranges so the whole suite stays comfortably
//! under a minute; the full budget runs the documented ranges.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::betti::{
    betti_constant_sheaf, betti_polynomial, euler_characteristic, ih_betti,
    perverse_decomposition, schur_dim, Locus,
};
use crate::kring::{dual_partition, is_normal_form, normal_form, KClass};
use crate::laurent::{CurveContext, LaurentPoly};
use crate::lr::{lr_expand_product, lr_oracle_expand};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::repring::{
    bn_to_rep, compare_convolution_to_tensor, sl_reduce, sl_tensor, sp_branch_from_gl,
    sp_tensor_oracle, Group, RepElement,
};

/// Size budget for the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub quick: bool,
    /// Optional cap applied on top of the per-check degree defaults.
    pub bound: Option<u32>,
}

impl Budget {
    pub fn quick() -> Self {
        Budget {
            quick: true,
            bound: None,
        }
    }

    pub fn full() -> Self {
        Budget {
            quick: false,
            bound: None,
        }
    }

    fn deg(&self, full: u32, quick: u32) -> u32 {
        let d = if self.quick { quick } else { full };
        match self.bound {
            Some(b) => d.min(b),
            None => d,
        }
    }
}

/// One named check of the suite.
pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn(&Budget) -> Result<(), String>,
}

/// The whole suite in execution order.
pub fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "A1",
            title: "Littlewood-Richardson oracle equivalence and conjugation symmetry",
            run: a1_lr_oracle,
        },
        Check {
            id: "A2",
            title: "Betti ring homomorphism",
            run: a2_betti_ring_homomorphism,
        },
        Check {
            id: "A3",
            title: "Euler characteristic equals the SL dimension",
            run: a3_euler_dimension,
        },
        Check {
            id: "A4",
            title: "Riemann-Roch identities",
            run: a4_riemann_roch,
        },
        Check {
            id: "A5",
            title: "perverse decomposition bounds",
            run: a5_perverse_decomposition,
        },
        Check {
            id: "A6",
            title: "duality and triviality in the quotient ring",
            run: a6_duality_triviality,
        },
        Check {
            id: "A7",
            title: "tensor equivalence, special linear side",
            run: a7_equivalence_sl,
        },
        Check {
            id: "A8",
            title: "tensor equivalence, symplectic side",
            run: a8_equivalence_sp,
        },
        Check {
            id: "A9",
            title: "intersection cohomology of the Brill-Noether loci",
            run: a9_intersection_cohomology,
        },
        Check {
            id: "A10",
            title: "top degree law",
            run: a10_degree_law,
        },
    ]
}

fn nh(g: u32) -> CurveContext {
    CurveContext::new(g, false).unwrap()
}

fn hy(g: u32) -> CurveContext {
    CurveContext::new(g, true).unwrap()
}

/// A1: the filling count and the Schur-expansion oracle agree for every
/// triple up to degree 8, and conjugating all three arguments preserves
/// the coefficient.
pub fn a1_lr_oracle(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(8, 6);
    for n in 0..=max {
        for a in 0..=n {
            for alpha in partitions_of(a) {
                for beta in partitions_of(n - a) {
                    let fast = lr_expand_product(&alpha, &beta);
                    let slow = lr_oracle_expand(&alpha, &beta, max.max(8))
                        .map_err(|e| e.to_string())?;
                    if fast != slow {
                        return Err(format!(
                            "expansions of {} * {} disagree: {:?} vs {:?}",
                            alpha, beta, fast, slow
                        ));
                    }
                    for gamma in partitions_of(n) {
                        let m = fast.get(&gamma).copied().unwrap_or(0);
                        let conj = lr_expand_product(&alpha.conjugate(), &beta.conjugate())
                            .get(&gamma.conjugate())
                            .copied()
                            .unwrap_or(0);
                        if m != conj {
                            return Err(format!(
                                "conjugation symmetry fails at ({}, {}, {}): {} vs {}",
                                alpha, beta, gamma, m, conj
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A2: `h(δ_α)·h(δ_β) = Σ_γ m_{αβ}^γ h(δ_γ)` with the sum over the full
/// expansion, no cutoff.
pub fn a2_betti_ring_homomorphism(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(5, 4);
    let genera: &[u32] = if budget.quick { &[2, 3] } else { &[2, 3, 4] };
    for &g in genera {
        let ctx = nh(g);
        let shapes = partitions_up_to(max);
        for alpha in &shapes {
            for beta in &shapes {
                let lhs = &betti_polynomial(alpha, &ctx) * &betti_polynomial(beta, &ctx);
                let mut rhs = LaurentPoly::zero();
                for (gamma, m) in lr_expand_product(alpha, beta) {
                    rhs += &betti_polynomial(&gamma, &ctx).scaled(&BigInt::from(m));
                }
                if lhs != rhs {
                    return Err(format!(
                        "h(δ_{})·h(δ_{}) != Σ m h(δ_γ) at g={}: {} vs {}",
                        alpha, beta, g, lhs, rhs
                    ));
                }
            }
        }
    }
    Ok(())
}

/// A3: the alternating sum of cohomology dimensions equals
/// `s_{α*}(1^{2g-2})`, including the binomial row for single-row shapes.
pub fn a3_euler_dimension(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(8, 6);
    for g in [3u32, 4] {
        let ctx = nh(g);
        for alpha in partitions_up_to(max) {
            if !is_normal_form(&alpha, &ctx) {
                continue;
            }
            let euler = euler_characteristic(&alpha, &ctx);
            let dim = BigInt::from(schur_dim(&alpha.conjugate(), 2 * g - 2));
            if euler != dim {
                return Err(format!(
                    "χ(δ_{}) = {} but dim H^(α*) = {} at g={}",
                    alpha, euler, dim, g
                ));
            }
        }
    }
    // the binomial row at g=3: (1,4,6,4,1,0,0)
    let ctx = nh(3);
    let expect = [1i64, 4, 6, 4, 1, 0, 0];
    for (r, &e) in expect.iter().enumerate() {
        let euler = euler_characteristic(&Partition::row(r as u32), &ctx);
        if euler != BigInt::from(e) {
            return Err(format!("χ(δ_{}) = {} expected {} at g=3", r, euler, e));
        }
    }
    Ok(())
}

/// A4: `h(δ_{g-1+τ}) = h(δ_{g-1-τ}) + [τ]_t·h(δ_X)` and the projective
/// bundle range `h(δ_d) = [d-g+1]_t·h(δ_X)` for `d >= 2g-1`.
pub fn a4_riemann_roch(_budget: &Budget) -> Result<(), String> {
    for g in [2u32, 3, 4, 5] {
        let ctx = nh(g);
        let hx = betti_constant_sheaf(&ctx);
        for tau in 1..=(g - 1) {
            let lhs = betti_polynomial(&Partition::row(g - 1 + tau), &ctx);
            let rhs = &betti_polynomial(&Partition::row(g - 1 - tau), &ctx)
                + &(&LaurentPoly::quantum_integer(tau) * &hx);
            if lhs != rhs {
                return Err(format!("Riemann-Roch fails at g={} τ={}", g, tau));
            }
        }
        for d in (2 * g - 1)..=(2 * g + 3) {
            let lhs = betti_polynomial(&Partition::row(d), &ctx);
            let rhs = &LaurentPoly::quantum_integer(d - g + 1) * &hx;
            if lhs != rhs {
                return Err(format!("large-degree collapse fails at g={} d={}", g, d));
            }
        }
    }
    Ok(())
}

/// A5: vanishing of the constant multiplicity below the threshold, the two
/// pinned values, the degree estimate, and shape of `P` throughout.
pub fn a5_perverse_decomposition(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(8, 6);
    for g in [3u32, 4, 5] {
        let ctx = nh(g);
        for alpha in partitions_up_to(max) {
            let rep = perverse_decomposition(&alpha, &ctx).map_err(|e| e.to_string())?;
            if alpha.first() < g && !rep.p_constant.is_zero() {
                return Err(format!("P_{} != 0 at g={} despite α₁ <= g-1", alpha, g));
            }
            if !rep.p_constant.is_palindromic() || !rep.p_constant.all_coeffs_nonnegative() {
                return Err(format!("P_{} malformed at g={}", alpha, g));
            }
            if !rep.p_constant.is_zero()
                && rep.p_constant.deg_plus().unwrap() > alpha.first() as i64 - g as i64
            {
                return Err(format!("deg P_{} exceeds α₁ - g at g={}", alpha, g));
            }
        }
        let rep = perverse_decomposition(&Partition::row(g), &ctx).map_err(|e| e.to_string())?;
        if rep.p_constant != LaurentPoly::one() {
            return Err(format!("P_(g) != 1 at g={}", g));
        }
        let shape = Partition::new([g, 1]).unwrap();
        let rep = perverse_decomposition(&shape, &ctx).map_err(|e| e.to_string())?;
        if rep.p_constant != LaurentPoly::constant(2 * g) {
            return Err(format!("P_(g,1) != 2g at g={}", g));
        }
    }
    Ok(())
}

/// A6: the dual class has the same image in the quotient ring, classes
/// with a part above `χ` die there, and duality is an involution.
pub fn a6_duality_triviality(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(6, 5);
    for g in [2u32, 3, 4] {
        let ctx = nh(g);
        for alpha in partitions_up_to(max) {
            if !is_normal_form(&alpha, &ctx) {
                continue;
            }
            let beta = dual_partition(&alpha, &ctx).map_err(|e| e.to_string())?;
            let back = dual_partition(&beta, &ctx).map_err(|e| e.to_string())?;
            if back != alpha {
                return Err(format!("duality not an involution at {} (g={})", alpha, g));
            }
            let diff = &betti_polynomial(&beta, &ctx) - &betti_polynomial(&alpha, &ctx);
            if !diff.reduce_mod_ideal(&ctx).is_zero() {
                return Err(format!(
                    "h(δ_{}) and h(δ_{}) differ in the quotient ring at g={}",
                    beta, alpha, g
                ));
            }
        }
    }
    // classes that vanish: sample partitions with a part above χ from a
    // deterministic generator, with replacement
    let samples = if budget.quick { 60 } else { 200 };
    let mut pool: Vec<(u32, Partition)> = Vec::new();
    for g in [2u32, 3, 4, 5] {
        let chi = nh(g).chi();
        for gamma in partitions_up_to(10) {
            if gamma.first() > chi {
                pool.push((g, gamma));
            }
        }
    }
    let mut state = 0x9e3779b97f4a7c15u64;
    for _ in 0..samples {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let (g, gamma) = &pool[(state % pool.len() as u64) as usize];
        let ctx = nh(*g);
        if !betti_polynomial(gamma, &ctx).reduce_mod_ideal(&ctx).is_zero() {
            return Err(format!(
                "h(δ_{}) survives the quotient at g={} despite γ₁ > χ",
                gamma, g
            ));
        }
    }
    Ok(())
}

fn equivalence_range(budget: &Budget, ctx: &CurveContext) -> Vec<(Partition, Partition)> {
    let max = budget.deg(6, 4);
    let mut out = Vec::new();
    for n in 0..=max {
        for a in 0..=n {
            for alpha in partitions_of(a) {
                if !is_normal_form(&alpha, ctx) {
                    continue;
                }
                for beta in partitions_of(n - a) {
                    if !is_normal_form(&beta, ctx) {
                        continue;
                    }
                    out.push((alpha.clone(), beta));
                }
            }
        }
    }
    out
}

/// A7: convolve-then-map equals map-then-tensor over `SL(2g-2)`.
pub fn a7_equivalence_sl(budget: &Budget) -> Result<(), String> {
    for g in [3u32, 4] {
        let ctx = nh(g);
        for (alpha, beta) in equivalence_range(budget, &ctx) {
            let report =
                compare_convolution_to_tensor(&alpha, &beta, &ctx).map_err(|e| e.to_string())?;
            if !report.equal() {
                return Err(format!(
                    "SL equivalence fails at g={} for {} * {}: {} vs {}",
                    g, alpha, beta, report.left, report.right
                ));
            }
        }
    }
    Ok(())
}

/// A8: the symplectic side of the equivalence plus the replayed tensor
/// axioms of the standard representation.
pub fn a8_equivalence_sp(budget: &Budget) -> Result<(), String> {
    for g in [3u32, 4] {
        let ctx = hy(g);
        for (alpha, beta) in equivalence_range(budget, &ctx) {
            let report =
                compare_convolution_to_tensor(&alpha, &beta, &ctx).map_err(|e| e.to_string())?;
            if !report.equal() {
                return Err(format!(
                    "Sp equivalence fails at g={} for {} * {}: {} vs {}",
                    g, alpha, beta, report.left, report.right
                ));
            }
        }
    }

    // axiom replay at both genera, both flavors
    for g in [3u32, 4] {
        let n = 2 * g - 2;
        let one = Partition::row(1);
        // SL: W⊗W has two constituents; Λ^{2g-2}(W) is trivial
        let sq = sl_tensor(&one, &one, n);
        if sq.constituent_count() != 2 {
            return Err(format!("SL W⊗W has {} constituents", sq.constituent_count()));
        }
        match sl_reduce(&Partition::column(n), n) {
            Some(label) if label.is_empty() => {}
            other => return Err(format!("Λ^N(W) reduced to {:?}", other)),
        }

        // Sp: three constituents, trivial in Λ², none in Λ³, ≤7 in W^{⊗3}
        let m = g - 1;
        let sq = sp_tensor_oracle(&one, &one, m).map_err(|e| e.to_string())?;
        if sq.constituent_count() != 3 {
            return Err(format!("Sp W⊗W has {} constituents", sq.constituent_count()));
        }
        let wedge2 = sp_branch_from_gl(&Partition::column(2), m).map_err(|e| e.to_string())?;
        if wedge2.multiplicity(&Partition::empty()) != 1 || wedge2.constituent_count() < 2 {
            return Err("Λ²(W) should contain the trivial representation and more".into());
        }
        let wedge3 = if 3 <= m {
            sp_branch_from_gl(&Partition::column(3), m).map_err(|e| e.to_string())?
        } else {
            bn_to_rep(&Partition::row(3), &hy(g)).map_err(|e| e.to_string())?
        };
        if wedge3.multiplicity(&Partition::empty()) != 0 {
            return Err("Λ³(W) must not contain the trivial representation".into());
        }
        let cube = sq
            .tensor(&RepElement::irreducible(Group::Sp { m }, one.clone()))
            .map_err(|e| e.to_string())?;
        if cube.constituent_count() > 7 {
            return Err(format!(
                "Sp W^⊗3 has {} constituents",
                cube.constituent_count()
            ));
        }
        if g == 3 {
            // the image of the reduced triple convolution has six
            let ctx = hy(3);
            let c1 = KClass::of(&one, ctx);
            let cube_class = c1
                .convolve(&c1)
                .and_then(|c| c.convolve(&c1))
                .map_err(|e| e.to_string())?;
            let mut count = 0u64;
            for (gamma, coeff) in cube_class.terms() {
                let mult = u64::try_from(coeff.coeff(0)).map_err(|e| e.to_string())?;
                count += mult
                    * bn_to_rep(gamma, &ctx)
                        .map_err(|e| e.to_string())?
                        .constituent_count();
            }
            if count != 6 {
                return Err(format!(
                    "image of the reduced triple convolution has {} constituents, expected 6",
                    count
                ));
            }
        }
    }
    Ok(())
}

/// A9: theta-divisor coefficient, hyperelliptic differences, and the
/// difference-surface polynomials.
pub fn a9_intersection_cohomology(_budget: &Budget) -> Result<(), String> {
    for g in [3u32, 4, 5] {
        for ctx in [nh(g), hy(g)] {
            let ih = ih_betti(Locus::Theta, &ctx).map_err(|e| e.to_string())?;
            if ih.coeff(2 - g as i64) != BigInt::from(2 * g) {
                return Err(format!(
                    "IH¹(Θ) has dimension {} at {}, expected {}",
                    ih.coeff(2 - g as i64),
                    ctx,
                    2 * g
                ));
            }
        }
        let ctx = hy(g);
        for d in 1..=(g - 1) {
            let ih = ih_betti(Locus::W { d }, &ctx).map_err(|e| e.to_string())?;
            if !ih.all_coeffs_nonnegative() || !ih.is_palindromic() {
                return Err(format!("IH(W_{}) malformed at {}", d, ctx));
            }
        }
    }
    for g in [5u32, 6] {
        let ctx = nh(g);
        for r in 1..g.div_ceil(2) {
            if 2 * r >= g {
                continue;
            }
            let ih = ih_betti(Locus::WMinusW { r }, &ctx).map_err(|e| e.to_string())?;
            if !ih.all_coeffs_nonnegative() || !ih.is_palindromic() {
                return Err(format!("IH(W_{0} - W_{0}) malformed at g={1}", r, g));
            }
            if ih.deg_plus().unwrap_or(0) > g as i64 - 1 {
                return Err(format!(
                    "IH(W_{0} - W_{0}) exceeds degree g-1 at g={1}",
                    r, g
                ));
            }
        }
    }
    Ok(())
}

/// A10: `deg_u h(δ_γ) = γ₁` for `γ₁ <= 2g`.
pub fn a10_degree_law(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(8, 6);
    for g in [2u32, 3] {
        let ctx = nh(g);
        for gamma in partitions_up_to(max) {
            if gamma.first() > 2 * g {
                continue;
            }
            let h = betti_polynomial(&gamma, &ctx);
            if h.deg_plus().unwrap_or(0) != gamma.first() as i64 {
                return Err(format!(
                    "deg h(δ_{}) = {:?} but γ₁ = {} at g={}",
                    gamma,
                    h.deg_plus(),
                    gamma.first(),
                    g
                ));
            }
        }
    }
    Ok(())
}

/// Extra structural invariants not tied to a single criterion; exercised by
/// `selftest` after the lettered checks.
pub fn extra_invariants(budget: &Budget) -> Result<(), String> {
    let max = budget.deg(6, 4);
    // stripping compatibility: adding a part equal to χ does not change the
    // image in the quotient ring
    for g in [2u32, 3] {
        let ctx = nh(g);
        let chi = ctx.chi();
        for rest in partitions_up_to(max) {
            if rest.first() > chi {
                continue;
            }
            let mut parts = vec![chi];
            parts.extend_from_slice(rest.parts());
            let padded = Partition::new(parts).map_err(|e| e.to_string())?;
            let diff = &betti_polynomial(&padded, &ctx) - &betti_polynomial(&rest, &ctx);
            if !diff.reduce_mod_ideal(&ctx).is_zero() {
                return Err(format!(
                    "stripping χ from ({}) changes the quotient image at g={}",
                    padded, g
                ));
            }
        }
    }
    // curve powers against iterated convolution
    for g in [2u32, 3, 4] {
        let ctx = nh(g);
        let c1 = KClass::of(&Partition::row(1), ctx);
        let mut acc = KClass::unit(ctx);
        for r in 0..=6u32 {
            if acc != KClass::curve_power(r, ctx) {
                return Err(format!("curve power mismatch at g={} r={}", g, r));
            }
            acc = acc.convolve(&c1).map_err(|e| e.to_string())?;
        }
    }
    // the perverse part never vanishes for nonempty normal forms
    for g in [3u32, 4] {
        let ctx = nh(g);
        for alpha in partitions_up_to(max) {
            if alpha.is_empty() || !is_normal_form(&alpha, &ctx) {
                continue;
            }
            let rep = perverse_decomposition(&alpha, &ctx).map_err(|e| e.to_string())?;
            if rep.h_perverse.is_zero() {
                return Err(format!("perverse part of {} vanished at g={}", alpha, g));
            }
            if rep.h_perverse.evaluate_at_sign(1) < BigInt::zero() {
                return Err(format!("negative total Betti number at {} g={}", alpha, g));
            }
        }
    }
    // normal form keeps distinct keys distinct on a convolution sample
    let ctx = nh(3);
    let a = KClass::of(&Partition::new([2, 1]).unwrap(), ctx);
    let b = KClass::of(&Partition::new([2]).unwrap(), ctx);
    let prod = a.convolve(&b).map_err(|e| e.to_string())?;
    for gamma in prod.terms().keys() {
        if normal_form(gamma, &ctx) != Some(gamma.clone()) {
            return Err(format!("key {} is not in normal form", gamma));
        }
    }
    Ok(())
}
