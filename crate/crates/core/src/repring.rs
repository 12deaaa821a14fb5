//! Representation rings of `SL(N)` and `Sp(2m)` and the comparison harness
//! against the convolution ring.
//!
//! The special linear side is plain Littlewood-Richardson arithmetic with
//! full columns stripped. The symplectic side has two independent routes:
//! the Littlewood restriction rule (valid in the stable range) and a
//! brute-force Weyl-character oracle for rank `m <= 3` built on King's
//! symplectic tableaux, which covers every case the desk-scale comparisons
//! need.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::betti::schur_dim;
use crate::error::{Error, Result};
use crate::kring::{is_normal_form, KClass};
use crate::laurent::CurveContext;
use crate::lr::{lr_coefficient, lr_expand_product};
use crate::partition::{partitions_of, Partition};

/// The classical group a label set refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// `SL(n)`; labels are partitions with fewer than `n` rows.
    Sl { n: u32 },
    /// `Sp(2m)`; labels are partitions with at most `m` rows.
    Sp { m: u32 },
}

impl Group {
    pub fn rank(&self) -> u32 {
        match self {
            Group::Sl { n } => *n,
            Group::Sp { m } => *m,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Group::Sl { .. } => "SL",
            Group::Sp { .. } => "Sp",
        }
    }

    fn label_valid(&self, label: &Partition) -> bool {
        match self {
            Group::Sl { n } => (label.len() as u32) < *n,
            Group::Sp { m } => label.len() as u32 <= *m,
        }
    }

    fn dim(&self, label: &Partition) -> BigUint {
        match self {
            Group::Sl { n } => sl_dim(label, *n),
            Group::Sp { m } => sp_dim(label, *m).expect("valid label"),
        }
    }
}

/// A nonnegative integer combination of irreducible labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepElement {
    group: Group,
    terms: BTreeMap<Partition, u64>,
}

impl RepElement {
    pub fn zero(group: Group) -> Self {
        RepElement {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn irreducible(group: Group, label: Partition) -> Self {
        let mut e = RepElement::zero(group);
        e.insert(label, 1);
        e
    }

    pub fn insert(&mut self, label: Partition, mult: u64) {
        debug_assert!(self.group.label_valid(&label));
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, label: &Partition) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    /// Number of irreducible constituents counted with multiplicity.
    pub fn constituent_count(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Total dimension, `Σ mult · dim(label)`.
    pub fn dimension(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (label, &mult) in &self.terms {
            total += self.group.dim(label) * BigUint::from(mult);
        }
        total
    }

    fn add_scaled(&mut self, other: &RepElement, factor: u64) {
        debug_assert_eq!(self.group, other.group);
        for (label, &mult) in &other.terms {
            self.insert(label.clone(), mult * factor);
        }
    }

    /// Tensor product decomposition, dispatching on the group.
    pub fn tensor(&self, other: &RepElement) -> Result<RepElement> {
        if self.group != other.group {
            return Err(Error::ContextMismatch);
        }
        let mut out = RepElement::zero(self.group);
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                let prod = match self.group {
                    Group::Sl { n } => sl_tensor(a, b, n),
                    Group::Sp { m } => sp_tensor_oracle(a, b, m)?,
                };
                out.add_scaled(&prod, ma * mb);
            }
        }
        Ok(out)
    }

    /// Ordered for printing: ascending degree, reverse-lex within a degree.
    pub fn sorted_terms(&self) -> Vec<(&Partition, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, &m)| (k, m)).collect();
        v.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.parts().cmp(a.parts()))
        });
        v
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (label, mult) in self.sorted_terms() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}:{}", label.bracket(), mult)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// special linear side
// ---------------------------------------------------------------------

/// Strips full columns of height `n`: `None` when the shape has more than
/// `n` rows, otherwise the label of the `SL(n)`-irreducible.
pub fn sl_reduce(lambda: &Partition, n: u32) -> Option<Partition> {
    if lambda.len() as u32 > n {
        return None;
    }
    if (lambda.len() as u32) < n {
        return Some(lambda.clone());
    }
    let last = lambda.part(n as usize - 1);
    Some(Partition::from_raw(
        lambda
            .parts()
            .iter()
            .map(|&p| p - last)
            .filter(|&p| p > 0)
            .collect(),
    ))
}

/// Tensor product of `SL(n)` irreducibles by Littlewood-Richardson
/// expansion with column reduction.
pub fn sl_tensor(lambda: &Partition, mu: &Partition, n: u32) -> RepElement {
    let mut out = RepElement::zero(Group::Sl { n });
    for (gamma, mult) in lr_expand_product(lambda, mu) {
        if let Some(label) = sl_reduce(&gamma, n) {
            out.insert(label, mult);
        }
    }
    out
}

/// Dimension of the `SL(n)` (equivalently `GL(n)`) irreducible.
pub fn sl_dim(lambda: &Partition, n: u32) -> BigUint {
    schur_dim(lambda, n)
}

// ---------------------------------------------------------------------
// symplectic side
// ---------------------------------------------------------------------

/// Weyl dimension formula for `Sp(2m)`, type C.
pub fn sp_dim(lambda: &Partition, m: u32) -> Result<BigUint> {
    if lambda.len() as u32 > m {
        return Err(Error::OutOfRange(format!(
            "label {} has more than {} rows",
            lambda, m
        )));
    }
    let m = m as i64;
    let l: Vec<i64> = (0..m).map(|i| lambda.part(i as usize) as i64 + m - i).collect();
    let rho: Vec<i64> = (0..m).map(|i| m - i).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m as usize {
        num *= BigUint::from(l[i] as u64);
        den *= BigUint::from(rho[i] as u64);
        for j in i + 1..m as usize {
            num *= BigUint::from((l[i] - l[j]) as u64) * BigUint::from((l[i] + l[j]) as u64);
            den *= BigUint::from((rho[i] - rho[j]) as u64)
                * BigUint::from((rho[i] + rho[j]) as u64);
        }
    }
    Ok(num / den)
}

/// Littlewood restriction `GL(2m) ↓ Sp(2m)` in the stable range
/// `len(λ) <= m`: the multiplicity of `μ` is `Σ_β c^λ_{μβ}` over `β` with
/// all column heights even.
pub fn sp_branch_from_gl(lambda: &Partition, m: u32) -> Result<RepElement> {
    if lambda.len() as u32 > m {
        return Err(Error::OutOfRange(format!(
            "Littlewood restriction of {} needs at most {} rows; use the character oracle",
            lambda, m
        )));
    }
    let mut out = RepElement::zero(Group::Sp { m });
    let deg = lambda.degree();
    for b in (0..=deg).step_by(2) {
        for half in partitions_of(b / 2) {
            // β with even column heights: each part of `half` twice
            let beta = Partition::from_raw(
                half.parts()
                    .iter()
                    .flat_map(|&p| [p, p])
                    .collect(),
            );
            if !lambda.contains(&beta) {
                continue;
            }
            for mu in partitions_of(deg - b) {
                let c = lr_coefficient(&mu, &beta, lambda);
                if c > 0 {
                    out.insert(mu, c);
                }
            }
        }
    }
    Ok(out)
}

/// The stable tensor multiplicity `Σ c^μ_{αβ} c^ν_{αγ} c^λ_{βγ}`; equals
/// the `Sp(2m)` multiplicity whenever `len(μ) + len(ν) <= m`.
pub fn newell_littlewood(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    let (dm, dn, dl) = (mu.degree(), nu.degree(), lambda.degree());
    if dm + dn < dl || (dm + dn - dl) % 2 != 0 {
        return 0;
    }
    let da = (dm + dn - dl) / 2;
    if da > dm.min(dn) {
        return 0;
    }
    let mut total = 0u64;
    for alpha in partitions_of(da) {
        if !mu.contains(&alpha) || !nu.contains(&alpha) {
            continue;
        }
        for beta in partitions_of(dm - da) {
            let c1 = lr_coefficient(&alpha, &beta, mu);
            if c1 == 0 {
                continue;
            }
            for gamma in partitions_of(dn - da) {
                let c2 = lr_coefficient(&alpha, &gamma, nu);
                if c2 == 0 {
                    continue;
                }
                let c3 = lr_coefficient(&beta, &gamma, lambda);
                total += c1 * c2 * c3;
            }
        }
    }
    total
}

/// A Weyl-group-symmetric Laurent polynomial on the weight lattice `Z^m`;
/// the character oracle's working representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpCharacter {
    m: usize,
    coeffs: HashMap<Vec<i32>, i64>,
}

impl SpCharacter {
    fn zero(m: usize) -> Self {
        SpCharacter {
            m,
            coeffs: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at the identity, i.e. the dimension of a genuine character.
    pub fn dimension(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn mul(&self, other: &SpCharacter) -> SpCharacter {
        debug_assert_eq!(self.m, other.m);
        let mut out = SpCharacter::zero(self.m);
        for (wa, ca) in &self.coeffs {
            for (wb, cb) in &other.coeffs {
                let w: Vec<i32> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                *out.coeffs.entry(w).or_insert(0) += ca * cb;
            }
        }
        out.coeffs.retain(|_, v| *v != 0);
        out
    }

    /// Checks invariance under coordinate permutations and sign flips; the
    /// Weyl group of type C. Quadratic, for tests only.
    pub fn is_weyl_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(w, c)| {
            let mut dom: Vec<i32> = w.iter().map(|x| x.abs()).collect();
            dom.sort_unstable_by(|a, b| b.cmp(a));
            self.coeffs.get(&dom) == Some(c) && {
                let mut flipped = w.clone();
                flipped[0] = -flipped[0];
                self.coeffs.get(&flipped) == Some(c)
            }
        })
    }
}

fn king_cache() -> &'static Mutex<HashMap<(Partition, u32), SpCharacter>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), SpCharacter>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible `Sp(2m)` character by King's symplectic tableaux: entries
/// from the ordered alphabet `1 < 1̄ < 2 < 2̄ < … < m < m̄`, rows weakly and
/// columns strictly increasing, entries in row `i` at least `i` (unbarred).
/// Entry `k` contributes `x_k`, entry `k̄` contributes `x_k^{-1}`.
pub fn sp_character(lambda: &Partition, m: u32) -> SpCharacter {
    let key = (lambda.clone(), m);
    if let Some(c) = king_cache().lock().unwrap().get(&key) {
        return c.clone();
    }
    let mu = m as usize;
    let mut out = SpCharacter::zero(mu);
    if lambda.len() > mu {
        king_cache().lock().unwrap().insert(key, out.clone());
        return out;
    }
    let rows = lambda.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; lambda.part(r) as usize])
        .collect();
    let mut weight = vec![0i32; mu];

    fn rec(
        r: usize,
        c: usize,
        shape: &Partition,
        m2: u32,
        grid: &mut Vec<Vec<u32>>,
        weight: &mut Vec<i32>,
        out: &mut SpCharacter,
    ) {
        if r == shape.len() {
            *out.coeffs.entry(weight.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        // symbol codes: 2k = letter k+1, 2k+1 = barred k+1
        let mut lo = 2 * r as u32; // row condition: entries >= unbarred row index
        if c > 0 {
            lo = lo.max(grid[r][c - 1] - 1); // weak along the row
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c]); // strict down the column
        }
        for code in lo..m2 {
            grid[r][c] = code + 1; // store shifted so 0 means empty
            let coord = (code / 2) as usize;
            let delta = if code % 2 == 0 { 1 } else { -1 };
            weight[coord] += delta;
            rec(nr, nc, shape, m2, grid, weight, out);
            weight[coord] -= delta;
        }
        grid[r][c] = 0;
    }

    if rows == 0 {
        out.coeffs.insert(weight, 1);
    } else {
        rec(0, 0, lambda, 2 * m, &mut grid, &mut weight, &mut out);
    }
    king_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// The Schur polynomial `s_λ` evaluated at symplectic eigenvalues
/// `x_1, x_1^{-1}, …, x_m, x_m^{-1}`: the character of the Schur functor
/// applied to the standard representation, whatever the number of rows.
pub fn schur_restricted_to_sp(lambda: &Partition, m: u32) -> SpCharacter {
    let mu = m as usize;
    let mut out = SpCharacter::zero(mu);
    let n = 2 * m;
    if lambda.len() as u32 > n {
        return out;
    }
    let rows = lambda.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; lambda.part(r) as usize])
        .collect();
    let mut weight = vec![0i32; mu];

    fn rec(
        r: usize,
        c: usize,
        shape: &Partition,
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        weight: &mut Vec<i32>,
        out: &mut SpCharacter,
    ) {
        if r == shape.len() {
            *out.coeffs.entry(weight.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 && c < grid[r - 1].len() {
            grid[r - 1][c] + 1
        } else {
            1
        };
        for v in left.max(above)..=n {
            grid[r][c] = v;
            let coord = ((v - 1) / 2) as usize;
            let delta = if v % 2 == 1 { 1 } else { -1 };
            weight[coord] += delta;
            rec(nr, nc, shape, n, grid, weight, out);
            weight[coord] -= delta;
        }
        grid[r][c] = 0;
    }

    if rows == 0 {
        out.coeffs.insert(weight, 1);
    } else {
        rec(0, 0, lambda, n, &mut grid, &mut weight, &mut out);
    }
    out
}

/// Decomposes a genuine (nonvirtual) symmetric character into irreducible
/// symplectic characters by greedily stripping the lexicographically
/// largest weight, which is always dominant. A negative multiplicity on
/// the way down means the input was not a character and is reported as an
/// internal inconsistency.
pub fn sp_decompose_character(chi: &SpCharacter) -> Result<RepElement> {
    let m = chi.m as u32;
    let mut rest = chi.clone();
    let mut out = RepElement::zero(Group::Sp { m });
    while !rest.is_zero() {
        let top = rest.coeffs.keys().max().unwrap().clone();
        let mult = rest.coeffs[&top];
        if mult < 0 {
            return Err(Error::InternalConsistency(format!(
                "negative multiplicity {} at weight {:?} while decomposing a character",
                mult, top
            )));
        }
        if top.iter().any(|&x| x < 0) || top.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InternalConsistency(format!(
                "leading weight {:?} of a symmetric character is not dominant",
                top
            )));
        }
        let label = Partition::from_raw(
            top.iter()
                .map(|&x| x as u32)
                .filter(|&x| x > 0)
                .collect(),
        );
        let irr = sp_character(&label, m);
        for (w, c) in &irr.coeffs {
            *rest.coeffs.entry(w.clone()).or_insert(0) -= mult * c;
        }
        rest.coeffs.retain(|_, v| *v != 0);
        out.insert(label, mult as u64);
    }
    Ok(out)
}

type TensorKey = (Partition, Partition, u32);

fn sp_tensor_cache() -> &'static Mutex<HashMap<TensorKey, RepElement>> {
    static CACHE: OnceLock<Mutex<HashMap<TensorKey, RepElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Tensor product of `Sp(2m)` irreducibles by brute-force character
/// arithmetic; limited to rank `m <= 3`.
pub fn sp_tensor_oracle(lambda: &Partition, mu: &Partition, m: u32) -> Result<RepElement> {
    if m > 3 {
        return Err(Error::Unsupported(format!(
            "symplectic character oracle is limited to rank <= 3, got m={}",
            m
        )));
    }
    if lambda.len() as u32 > m || mu.len() as u32 > m {
        return Err(Error::OutOfRange(format!(
            "labels {} and {} must have at most {} rows",
            lambda, mu, m
        )));
    }
    let key = (lambda.clone(), mu.clone(), m);
    if let Some(r) = sp_tensor_cache().lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let product = sp_character(lambda, m).mul(&sp_character(mu, m));
    let result = sp_decompose_character(&product)?;
    sp_tensor_cache().lock().unwrap().insert(key, result.clone());
    Ok(result)
}

// ---------------------------------------------------------------------
// the bridge between the two rings
// ---------------------------------------------------------------------

type BridgeKey = (Partition, u32, bool);

fn bn_rep_cache() -> &'static Mutex<HashMap<BridgeKey, RepElement>> {
    static CACHE: OnceLock<Mutex<HashMap<BridgeKey, RepElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Image of the perverse class indexed by `α` in the representation ring:
/// the Schur functor `S^{α*}` of the standard representation. A single
/// label for `SL(2g-2)`; for `Sp(2g-2)` the Littlewood restriction of
/// `α*`, computed by the branching rule in the stable range and by the
/// character oracle otherwise.
pub fn bn_to_rep(alpha: &Partition, ctx: &CurveContext) -> Result<RepElement> {
    if ctx.genus() < 3 {
        return Err(Error::Unsupported(
            "representation-ring comparisons need genus >= 3".into(),
        ));
    }
    if !is_normal_form(alpha, ctx) {
        return Err(Error::NotNormalForm(alpha.to_string(), ctx.genus()));
    }
    let key = (alpha.clone(), ctx.genus(), ctx.is_hyperelliptic());
    if let Some(r) = bn_rep_cache().lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let conj = alpha.conjugate();
    let result = if !ctx.is_hyperelliptic() {
        let n = ctx.sl_rank();
        let label = sl_reduce(&conj, n).expect("normal form keeps fewer than N rows");
        RepElement::irreducible(Group::Sl { n }, label)
    } else {
        let m = ctx.sp_rank();
        if conj.len() as u32 <= m {
            sp_branch_from_gl(&conj, m)?
        } else if m <= 3 {
            sp_decompose_character(&schur_restricted_to_sp(&conj, m))?
        } else {
            return Err(Error::Unsupported(format!(
                "hyperelliptic branching of {} at genus {} is outside both the stable \
                 range and the character oracle",
                alpha,
                ctx.genus()
            )));
        }
    };
    bn_rep_cache().lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// Both sides of the equivalence for one product: the convolution expanded
/// in the ring and mapped over, against the tensor product taken in the
/// representation ring.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub ctx: CurveContext,
    pub left: RepElement,
    pub right: RepElement,
}

impl ComparisonReport {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }

    pub fn dimension(&self) -> BigUint {
        self.left.dimension()
    }
}

/// Runs one instance of the equivalence: convolve-then-map against
/// map-then-tensor, reporting both multisets.
pub fn compare_convolution_to_tensor(
    alpha: &Partition,
    beta: &Partition,
    ctx: &CurveContext,
) -> Result<ComparisonReport> {
    if ctx.genus() < 3 {
        return Err(Error::Unsupported(
            "representation-ring comparisons need genus >= 3".into(),
        ));
    }
    if ctx.is_hyperelliptic() && ctx.sp_rank() > 3 {
        return Err(Error::Unsupported(
            "hyperelliptic comparisons are limited to genus 3 and 4".into(),
        ));
    }
    let conv = KClass::of(alpha, *ctx).convolve(&KClass::of(beta, *ctx))?;
    let group = match ctx.is_hyperelliptic() {
        false => Group::Sl { n: ctx.sl_rank() },
        true => Group::Sp { m: ctx.sp_rank() },
    };
    let mut left = RepElement::zero(group);
    for (gamma, coeff) in conv.terms() {
        // convolution of basis classes has constant integer coefficients
        let mult = if coeff.deg_plus() == Some(0) && coeff.deg_minus() == Some(0) {
            let c = coeff.coeff(0);
            u64::try_from(c.clone()).map_err(|_| {
                Error::InternalConsistency(format!("non-integral multiplicity {}", c))
            })?
        } else {
            return Err(Error::InternalConsistency(format!(
                "non-constant coefficient {} in a product of basis classes",
                coeff
            )));
        };
        left.add_scaled(&bn_to_rep(gamma, ctx)?, mult);
    }
    let right = bn_to_rep(alpha, ctx)?.tensor(&bn_to_rep(beta, ctx)?)?;
    Ok(ComparisonReport {
        alpha: alpha.clone(),
        beta: beta.clone(),
        ctx: *ctx,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn sl_reduction() {
        assert_eq!(sl_reduce(&Partition::column(4), 4), Some(Partition::empty()));
        assert_eq!(sl_reduce(&p(&[2, 1, 1, 1]), 4), Some(p(&[1])));
        assert_eq!(sl_reduce(&p(&[3, 1]), 4), Some(p(&[3, 1])));
        assert_eq!(sl_reduce(&Partition::column(5), 4), None);
    }

    #[test]
    fn sl_tensor_examples() {
        let t = sl_tensor(&p(&[1]), &p(&[1]), 4);
        assert_eq!(t.multiplicity(&p(&[2])), 1);
        assert_eq!(t.multiplicity(&p(&[1, 1])), 1);
        assert_eq!(t.constituent_count(), 2);

        let t = sl_tensor(&p(&[1, 1, 1]), &p(&[1]), 4);
        assert_eq!(t.multiplicity(&p(&[2, 1, 1])), 1);
        assert_eq!(t.multiplicity(&Partition::empty()), 1);

        let id = sl_tensor(&p(&[2, 1]), &Partition::empty(), 4);
        assert_eq!(id, RepElement::irreducible(Group::Sl { n: 4 }, p(&[2, 1])));
    }

    #[test]
    fn sl_dimension_consistency() {
        for lambda in partitions_up_to(5) {
            if lambda.len() >= 4 {
                continue;
            }
            for mu in partitions_up_to(4) {
                if mu.len() >= 4 {
                    continue;
                }
                let t = sl_tensor(&lambda, &mu, 4);
                let mut total = BigUint::zero();
                for (label, &mult) in t.terms() {
                    total += sl_dim(label, 4) * BigUint::from(mult);
                }
                assert_eq!(total, sl_dim(&lambda, 4) * sl_dim(&mu, 4));
            }
        }
    }

    #[test]
    fn sl_dims() {
        assert_eq!(sl_dim(&p(&[1]), 4), 4u32.into());
        assert_eq!(sl_dim(&p(&[2, 1]), 4), 20u32.into());
        assert_eq!(sl_dim(&Partition::empty(), 4), 1u32.into());
    }

    #[test]
    fn sp_dims() {
        assert_eq!(sp_dim(&p(&[1]), 2).unwrap(), 4u32.into());
        assert_eq!(sp_dim(&p(&[1, 1]), 2).unwrap(), 5u32.into());
        assert_eq!(sp_dim(&p(&[2]), 2).unwrap(), 10u32.into());
        assert_eq!(sp_dim(&p(&[1]), 3).unwrap(), 6u32.into());
        assert_eq!(sp_dim(&Partition::empty(), 3).unwrap(), 1u32.into());
        assert!(sp_dim(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn king_characters_are_symmetric_and_sized() {
        for m in 1..=3u32 {
            for lambda in partitions_up_to(6) {
                if lambda.len() as u32 > m {
                    continue;
                }
                let chi = sp_character(&lambda, m);
                assert!(chi.is_weyl_symmetric(), "λ={} m={}", lambda, m);
                assert_eq!(
                    BigUint::from(chi.dimension() as u64),
                    sp_dim(&lambda, m).unwrap(),
                    "λ={} m={}",
                    lambda,
                    m
                );
            }
        }
    }

    #[test]
    fn branching_examples() {
        // Λ²(W) contains the trivial representation …
        let b = sp_branch_from_gl(&p(&[1, 1]), 2).unwrap();
        assert_eq!(b.multiplicity(&p(&[1, 1])), 1);
        assert_eq!(b.multiplicity(&Partition::empty()), 1);
        assert_eq!(b.constituent_count(), 2);
        // … but S²(W) does not: it is the adjoint representation
        let b = sp_branch_from_gl(&p(&[2]), 2).unwrap();
        assert_eq!(b.multiplicity(&p(&[2])), 1);
        assert_eq!(b.constituent_count(), 1);
        // the standard representation restricts to itself
        for m in 1..=3 {
            let b = sp_branch_from_gl(&p(&[1]), m).unwrap();
            assert_eq!(b, RepElement::irreducible(Group::Sp { m }, p(&[1])));
        }
        assert!(sp_branch_from_gl(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn branching_dimension_consistency() {
        for m in 2..=3u32 {
            for lambda in partitions_up_to(6) {
                if lambda.len() as u32 > m {
                    continue;
                }
                let b = sp_branch_from_gl(&lambda, m).unwrap();
                assert_eq!(b.dimension(), schur_dim(&lambda, 2 * m), "λ={} m={}", lambda, m);
            }
        }
    }

    /// The restriction rule and the character oracle compute the same
    /// decomposition wherever both apply.
    #[test]
    fn branching_agrees_with_character_route() {
        for m in 2..=3u32 {
            for lambda in partitions_up_to(5) {
                if lambda.len() as u32 > m {
                    continue;
                }
                let by_rule = sp_branch_from_gl(&lambda, m).unwrap();
                let by_char =
                    sp_decompose_character(&schur_restricted_to_sp(&lambda, m)).unwrap();
                assert_eq!(by_rule, by_char, "λ={} m={}", lambda, m);
            }
        }
    }

    #[test]
    fn tensor_oracle_examples() {
        let t = sp_tensor_oracle(&p(&[1]), &p(&[1]), 2).unwrap();
        assert_eq!(t.multiplicity(&p(&[2])), 1);
        assert_eq!(t.multiplicity(&p(&[1, 1])), 1);
        assert_eq!(t.multiplicity(&Partition::empty()), 1);
        assert_eq!(t.dimension(), 16u32.into());

        let t = sp_tensor_oracle(&p(&[1, 1]), &p(&[1]), 2).unwrap();
        assert_eq!(t.multiplicity(&p(&[2, 1])), 1);
        assert_eq!(t.multiplicity(&p(&[1])), 1);
        assert_eq!(t.constituent_count(), 2);
        assert_eq!(t.dimension(), 20u32.into());

        let id = sp_tensor_oracle(&p(&[2, 1]), &Partition::empty(), 3).unwrap();
        assert_eq!(id.constituent_count(), 1);
        assert_eq!(id.multiplicity(&p(&[2, 1])), 1);

        assert!(matches!(
            sp_tensor_oracle(&p(&[1]), &p(&[1]), 4),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn tensor_oracle_dimension_consistency() {
        for m in 2..=3u32 {
            for lambda in partitions_up_to(3) {
                if lambda.len() as u32 > m {
                    continue;
                }
                for mu in partitions_up_to(3) {
                    if mu.len() as u32 > m {
                        continue;
                    }
                    let t = sp_tensor_oracle(&lambda, &mu, m).unwrap();
                    assert_eq!(
                        t.dimension(),
                        sp_dim(&lambda, m).unwrap() * sp_dim(&mu, m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn newell_littlewood_examples() {
        // empty first argument: multiplicity of λ in ν
        for nu in partitions_up_to(4) {
            for lambda in partitions_up_to(4) {
                let expect = u64::from(lambda == nu);
                assert_eq!(newell_littlewood(&Partition::empty(), &nu, &lambda), expect);
            }
        }
        for lambda in [p(&[2]), p(&[1, 1]), Partition::empty()] {
            assert_eq!(newell_littlewood(&p(&[1]), &p(&[1]), &lambda), 1);
        }
        assert_eq!(newell_littlewood(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(newell_littlewood(&p(&[1]), &p(&[1, 1]), &p(&[1])), 1);
    }

    #[test]
    fn newell_littlewood_matches_oracle_in_stable_range() {
        for m in 2..=3u32 {
            for mu in partitions_up_to(6) {
                for nu in partitions_up_to(6) {
                    if mu.len() + nu.len() > m as usize {
                        continue;
                    }
                    let t = sp_tensor_oracle(&mu, &nu, m).unwrap();
                    for lambda in partitions_up_to(6) {
                        if lambda.len() as u32 > m {
                            continue;
                        }
                        assert_eq!(
                            newell_littlewood(&mu, &nu, &lambda),
                            t.multiplicity(&lambda),
                            "μ={} ν={} λ={} m={}",
                            mu,
                            nu,
                            lambda,
                            m
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bn_to_rep_examples() {
        let nh3 = CurveContext::new(3, false).unwrap();
        // single rows map to exterior powers
        for i in 0..=3u32 {
            let r = bn_to_rep(&Partition::row(i), &nh3).unwrap();
            assert_eq!(
                r,
                RepElement::irreducible(Group::Sl { n: 4 }, Partition::column(i))
            );
        }

        let hy3 = CurveContext::new(3, true).unwrap();
        let r = bn_to_rep(&p(&[1, 1, 1]), &hy3).unwrap();
        assert_eq!(r.constituent_count(), 1);
        assert_eq!(r.multiplicity(&p(&[3])), 1);
        assert_eq!(r.dimension(), 20u32.into());

        let r = bn_to_rep(&p(&[2, 1]), &hy3).unwrap();
        assert_eq!(r.multiplicity(&p(&[2, 1])), 1);
        assert_eq!(r.multiplicity(&p(&[1])), 1);
        assert_eq!(r.constituent_count(), 2);

        let g2 = CurveContext::new(2, false).unwrap();
        assert!(matches!(
            bn_to_rep(&p(&[1]), &g2),
            Err(Error::Unsupported(_))
        ));
        assert!(bn_to_rep(&p(&[4]), &nh3).is_err());
    }

    /// Dimension of the mapped label reproduces the Euler characteristic
    /// of the class; ties this module to the Betti layer.
    #[test]
    fn sl_dimension_matches_euler_characteristic() {
        use crate::betti::euler_characteristic;
        use num_bigint::BigInt;
        for g in [3u32, 4] {
            let ctx = CurveContext::new(g, false).unwrap();
            let n = ctx.sl_rank();
            for alpha in partitions_up_to(8) {
                if !crate::kring::is_normal_form(&alpha, &ctx) {
                    continue;
                }
                let label = sl_reduce(&alpha.conjugate(), n).unwrap();
                assert_eq!(
                    BigInt::from(sl_dim(&label, n)),
                    euler_characteristic(&alpha, &ctx),
                    "α={} g={}",
                    alpha,
                    g
                );
            }
        }
    }

    #[test]
    fn comparison_examples() {
        let nh3 = CurveContext::new(3, false).unwrap();
        let r = compare_convolution_to_tensor(&p(&[1]), &p(&[1]), &nh3).unwrap();
        assert!(r.equal());
        assert_eq!(r.left.constituent_count(), 2);

        let hy3 = CurveContext::new(3, true).unwrap();
        let r = compare_convolution_to_tensor(&p(&[1]), &p(&[1]), &hy3).unwrap();
        assert!(r.equal());
        assert_eq!(r.left.constituent_count(), 3);
        assert_eq!(r.left.multiplicity(&Partition::empty()), 1);

        let r = compare_convolution_to_tensor(&p(&[1]), &p(&[1, 1]), &hy3).unwrap();
        assert!(r.equal());

        let hy5 = CurveContext::new(5, true).unwrap();
        assert!(matches!(
            compare_convolution_to_tensor(&p(&[1]), &p(&[1]), &hy5),
            Err(Error::Unsupported(_))
        ));
    }

    /// The triple self-convolution of the curve class in the hyperelliptic
    /// genus-3 ring: of its seven irreducible perverse constituents one is
    /// constant and dies in the quotient, so the image has six.
    #[test]
    fn triple_convolution_constituents() {
        let hy3 = CurveContext::new(3, true).unwrap();
        let c1 = KClass::of(&p(&[1]), hy3);
        let cube = c1.convolve(&c1).unwrap().convolve(&c1).unwrap();
        let mut image = RepElement::zero(Group::Sp { m: 2 });
        for (gamma, coeff) in cube.terms() {
            let mult = u64::try_from(coeff.coeff(0)).unwrap();
            image.add_scaled(&bn_to_rep(gamma, &hy3).unwrap(), mult);
        }
        assert_eq!(image.constituent_count(), 6);
        // the tensor side gives the same multiset; the trivial
        // representation cannot appear in an odd tensor power
        let w = bn_to_rep(&p(&[1]), &hy3).unwrap();
        let cube_rep = w.tensor(&w).unwrap().tensor(&w).unwrap();
        assert_eq!(cube_rep, image);
        assert_eq!(cube_rep.multiplicity(&Partition::empty()), 0);
    }
}
