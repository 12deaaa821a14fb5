//! Littlewood-Richardson coefficients.
//!
//! Two independent routes compute the same numbers:
//!
//! * [`lr_coefficient`] counts semistandard fillings of the skew diagram
//!   `γ/α` with content `β` whose reverse reading word is a lattice word,
//!   by depth-first search with row-by-row pruning;
//! * [`lr_oracle`] multiplies Schur polynomials in `deg(γ)` variables as
//!   explicit sums over semistandard tableaux and reads the coefficient off
//!   a greedy decomposition into Schur polynomials.
//!
//! The oracle shares no code with the filling search beyond the
//! [`Partition`] type, so agreement of the two is a real check.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Default degree bound for the brute-force oracle.
pub const DEFAULT_ORACLE_BOUND: u32 = 12;

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Littlewood-Richardson coefficient `m_{αβ}^γ`.
///
/// Zero unless `deg(α) + deg(β) = deg(γ)` and both `α` and `β` fit inside
/// `γ`. Results are memoized; the cache never changes a value.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.degree() + beta.degree() != gamma.degree() {
        return 0;
    }
    if !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    if alpha.len() + beta.len() < gamma.len() {
        return 0;
    }
    if beta.is_empty() {
        return u64::from(alpha == gamma);
    }
    let key = (alpha.clone(), beta.clone(), gamma.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return c;
    }
    let c = count_lattice_fillings(alpha, beta, gamma);
    lr_cache().lock().unwrap().insert(key, c);
    c
}

/// Counts fillings of `γ/α` with content `β`: rows weakly increase left to
/// right, columns strictly increase top to bottom, and the word obtained by
/// reading rows right to left, top to bottom, is a lattice word.
fn count_lattice_fillings(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    // cells in reading-word order
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..gamma.len() {
        let lo = alpha.part(r) as usize;
        let hi = gamma.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let k = beta.len();
    let mut grid: Vec<Vec<u32>> = (0..gamma.len())
        .map(|r| vec![0u32; gamma.part(r) as usize])
        .collect();
    let mut counts = vec![0u32; k];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        beta: &Partition,
        alpha: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        let row_cap = if c + 1 < grid[r].len() {
            grid[r][c + 1]
        } else {
            u32::MAX
        };
        let col_floor = if r > 0 && c < grid[r - 1].len() && c >= alpha.part(r - 1) as usize {
            grid[r - 1][c]
        } else {
            0
        };
        for v in 1..=beta.len() as u32 {
            if counts[(v - 1) as usize] >= beta.part((v - 1) as usize) {
                continue;
            }
            // lattice word: after writing v, the prefix still contains at
            // least as many v-1 as v
            if v > 1 && counts[(v - 1) as usize] >= counts[(v - 2) as usize] {
                continue;
            }
            if v > row_cap || v <= col_floor {
                continue;
            }
            grid[r][c] = v;
            counts[(v - 1) as usize] += 1;
            rec(idx + 1, cells, beta, alpha, grid, counts, total);
            counts[(v - 1) as usize] -= 1;
            grid[r][c] = 0;
        }
    }

    let mut total = 0u64;
    rec(0, &cells, beta, alpha, &mut grid, &mut counts, &mut total);
    total
}

/// Full expansion `s_α · s_β = Σ_γ m_{αβ}^γ s_γ`; only nonzero terms are
/// returned, every key has degree `deg(α) + deg(β)`.
pub fn lr_expand_product(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, u64> {
    let n = alpha.degree() + beta.degree();
    let max_first = alpha.first() + beta.first();
    let max_len = alpha.len() + beta.len();
    let mut out = BTreeMap::new();
    for gamma in partitions_of(n) {
        if gamma.first() > max_first || gamma.len() > max_len {
            continue;
        }
        let c = lr_coefficient(alpha, beta, &gamma);
        if c > 0 {
            out.insert(gamma, c);
        }
    }
    out
}

// ---------------------------------------------------------------------
// brute-force oracle: Schur polynomials as tableau sums
// ---------------------------------------------------------------------

type Monomials = HashMap<Vec<u32>, i64>;

fn schur_cache() -> &'static Mutex<HashMap<(Partition, u32), Monomials>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), Monomials>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `s_λ(x_1,…,x_n)` as a map from exponent vector to coefficient, computed
/// by enumerating semistandard tableaux of shape `λ` with entries `1..=n`.
fn schur_monomials(shape: &Partition, n: u32) -> Monomials {
    if let Some(m) = schur_cache().lock().unwrap().get(&(shape.clone(), n)) {
        return m.clone();
    }
    let mut out: Monomials = HashMap::new();
    if shape.len() as u32 > n {
        schur_cache()
            .lock()
            .unwrap()
            .insert((shape.clone(), n), out.clone());
        return out;
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; shape.part(r) as usize])
        .collect();
    let mut weight = vec![0u32; n as usize];

    fn rec(
        r: usize,
        c: usize,
        shape: &Partition,
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        weight: &mut Vec<u32>,
        out: &mut Monomials,
    ) {
        if r == shape.len() {
            *out.entry(weight.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 && c < grid[r - 1].len() {
                grid[r - 1][c] + 1
            } else {
                1
            };
            left.max(above)
        };
        for v in lo..=n {
            grid[r][c] = v;
            weight[(v - 1) as usize] += 1;
            rec(nr, nc, shape, n, grid, weight, out);
            weight[(v - 1) as usize] -= 1;
        }
        grid[r][c] = 0;
    }

    if rows == 0 {
        out.insert(weight, 1);
    } else {
        rec(0, 0, shape, n, &mut grid, &mut weight, &mut out);
    }
    schur_cache()
        .lock()
        .unwrap()
        .insert((shape.clone(), n), out.clone());
    out
}

fn mul_monomials(a: &Monomials, b: &Monomials) -> Monomials {
    let mut out: Monomials = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert(0);
            *entry += ca * cb;
            // products of genuine Schur sums never cancel, entries stay > 0
        }
    }
    out
}

/// Decomposes a symmetric polynomial (given monomial-wise) into Schur
/// polynomials by repeatedly stripping the lexicographically largest
/// exponent vector, which for a symmetric polynomial is always a partition.
fn greedy_schur_decompose(mut poly: Monomials, n: u32) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    while !poly.is_empty() {
        let top = poly.keys().max().unwrap().clone();
        let coeff = poly[&top];
        if coeff < 0 {
            return Err(Error::InternalConsistency(format!(
                "negative leading coefficient {} at {:?} in Schur decomposition",
                coeff, top
            )));
        }
        if top.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InternalConsistency(format!(
                "leading exponent {:?} of a symmetric polynomial is not a partition",
                top
            )));
        }
        let shape = Partition::from_raw(top.iter().copied().filter(|&p| p > 0).collect());
        for (e, c) in schur_monomials(&shape, n) {
            *poly.entry(e).or_insert(0) -= coeff * c;
        }
        poly.retain(|_, v| *v != 0);
        out.insert(shape, coeff as u64);
    }
    Ok(out)
}

type Expansion = BTreeMap<Partition, u64>;

fn oracle_cache() -> &'static Mutex<HashMap<(Partition, Partition), Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Full product expansion computed by the oracle route, in
/// `deg(α) + deg(β)` variables.
pub fn lr_oracle_expand(
    alpha: &Partition,
    beta: &Partition,
    bound: u32,
) -> Result<BTreeMap<Partition, u64>> {
    let n = alpha.degree() + beta.degree();
    if n > bound {
        return Err(Error::OracleOutOfRange { degree: n, bound });
    }
    let key = (alpha.clone(), beta.clone());
    if let Some(m) = oracle_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    // n variables suffice: every partition of n has at most n rows
    let pa = schur_monomials(alpha, n);
    let pb = schur_monomials(beta, n);
    let expansion = greedy_schur_decompose(mul_monomials(&pa, &pb), n)?;
    oracle_cache().lock().unwrap().insert(key, expansion.clone());
    Ok(expansion)
}

/// Independent verification oracle for `m_{αβ}^γ`; errors out above the
/// degree bound instead of grinding.
pub fn lr_oracle(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    bound: u32,
) -> Result<u64> {
    let n = gamma.degree();
    if n > bound {
        return Err(Error::OracleOutOfRange { degree: n, bound });
    }
    if alpha.degree() + beta.degree() != n {
        return Ok(0);
    }
    Ok(lr_oracle_expand(alpha, beta, bound)?
        .get(gamma)
        .copied()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn pieri_single_box() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1])), 0);
    }

    #[test]
    fn classic_multiplicity_two() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2, 1, 1])),
            1
        );
    }

    #[test]
    fn expansion_examples() {
        let e = lr_expand_product(&p(&[1]), &p(&[1]));
        assert_eq!(e.len(), 2);
        assert_eq!(e[&p(&[2])], 1);
        assert_eq!(e[&p(&[1, 1])], 1);

        let e = lr_expand_product(&p(&[2]), &p(&[1, 1]));
        assert_eq!(e.len(), 2);
        assert_eq!(e[&p(&[3, 1])], 1);
        assert_eq!(e[&p(&[2, 1, 1])], 1);

        let unit = lr_expand_product(&Partition::empty(), &p(&[3, 1]));
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[&p(&[3, 1])], 1);
    }

    /// Pieri rule with a single row: multiplicity one exactly on the
    /// interlacing partitions of the right degree.
    #[test]
    fn pieri_row_interlacing() {
        for alpha in partitions_up_to(5) {
            for b in 0..=4u32 {
                let beta = Partition::row(b);
                let n = alpha.degree() + b;
                for gamma in partitions_of(n) {
                    let m = lr_coefficient(&alpha, &beta, &gamma);
                    let r = gamma.len().max(alpha.len());
                    let interlaces = (0..r).all(|i| {
                        gamma.part(i) >= alpha.part(i)
                            && (i + 1 >= r || alpha.part(i) >= gamma.part(i + 1))
                    });
                    assert_eq!(m, u64::from(interlaces), "{} {} {}", alpha, b, gamma);
                }
            }
        }
    }

    #[test]
    fn commutativity_small_degrees() {
        for n in 0..=10u32 {
            for a in 0..=n / 2 {
                for alpha in partitions_of(a) {
                    for beta in partitions_of(n - a) {
                        for gamma in partitions_of(n) {
                            assert_eq!(
                                lr_coefficient(&alpha, &beta, &gamma),
                                lr_coefficient(&beta, &alpha, &gamma)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_matches_examples() {
        assert_eq!(
            lr_oracle(&p(&[1]), &p(&[1]), &p(&[2]), DEFAULT_ORACLE_BOUND).unwrap(),
            1
        );
        assert_eq!(
            lr_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), DEFAULT_ORACLE_BOUND).unwrap(),
            2
        );
        assert_eq!(
            lr_oracle(
                &p(&[2, 1]),
                &p(&[2, 1]),
                &p(&[2, 2, 1, 1]),
                DEFAULT_ORACLE_BOUND
            )
            .unwrap(),
            1
        );
    }

    /// The shared cache must not change results under concurrent use.
    #[test]
    fn concurrent_results_match_serial() {
        let jobs: Vec<(Partition, Partition)> = partitions_up_to(5)
            .into_iter()
            .flat_map(|a| {
                partitions_up_to(4)
                    .into_iter()
                    .map(move |b| (a.clone(), b))
            })
            .collect();
        let serial: Vec<_> = jobs
            .iter()
            .map(|(a, b)| lr_expand_product(a, b))
            .collect();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let jobs = jobs.clone();
                std::thread::spawn(move || {
                    jobs.iter()
                        .map(|(a, b)| lr_expand_product(a, b))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), serial);
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let big = p(&[7, 6]);
        let err = lr_oracle(&big, &big, &p(&[13, 13]), DEFAULT_ORACLE_BOUND).unwrap_err();
        assert!(matches!(err, Error::OracleOutOfRange { degree: 26, .. }));
    }

    /// Multiplying by a single row from the left-hand or the dual
    /// right-hand side gives solution sets matched by reversing and
    /// complementing in χ, once the overflowing solutions are discarded
    /// on either side.
    #[test]
    fn row_product_duality_bijection() {
        use std::collections::BTreeSet;
        for chi in [4u32, 6] {
            for full in partitions_up_to(6) {
                if full.first() > chi {
                    continue;
                }
                // split off the last part as the single-row factor
                let r = full.len().max(1);
                let alpha =
                    Partition::from_raw(full.parts()[..r.saturating_sub(1)].to_vec());
                let b = full.part(r - 1);
                let alpha_dual = Partition::from_raw(
                    alpha
                        .parts()
                        .iter()
                        .rev()
                        .map(|&p| chi - p)
                        .filter(|&p| p > 0)
                        .collect(),
                );
                let one = lr_expand_product(&alpha, &Partition::row(b));
                let two = lr_expand_product(&alpha_dual, &Partition::row(chi - b));
                assert!(one.values().all(|&m| m == 1));
                assert!(two.values().all(|&m| m == 1));
                let mapped: BTreeSet<Partition> = one
                    .keys()
                    .filter(|gamma| gamma.first() <= chi)
                    .map(|gamma| {
                        let parts: Vec<u32> =
                            (0..r).rev().map(|i| chi - gamma.part(i)).collect();
                        Partition::from_raw(parts.into_iter().filter(|&p| p > 0).collect())
                    })
                    .collect();
                let kept: BTreeSet<Partition> = two
                    .keys()
                    .filter(|mu| mu.first() <= chi)
                    .cloned()
                    .collect();
                assert_eq!(mapped, kept, "χ={} split {} | {}", chi, alpha, b);
            }
        }
    }

    /// Σ_γ m_{αβ}^γ s_γ(1^n) = s_α(1^n)·s_β(1^n), the dimension form of the
    /// product rule, at n = 6.
    #[test]
    fn dimension_sum_rule() {
        use crate::betti::schur_dim;
        let n = 6u32;
        for alpha in partitions_up_to(4) {
            for beta in partitions_up_to(4) {
                let mut total = num_bigint::BigUint::from(0u32);
                for (gamma, m) in lr_expand_product(&alpha, &beta) {
                    total += schur_dim(&gamma, n) * num_bigint::BigUint::from(m);
                }
                assert_eq!(total, schur_dim(&alpha, n) * schur_dim(&beta, n));
            }
        }
    }
}
