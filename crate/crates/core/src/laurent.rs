//! Exact Laurent polynomials in `u = t^{1/2}` and the quotient ring
//! `Z[u, u^{-1}] / (u + 2 + u^{-1})^g`.
//!
//! Betti polynomials are palindromic (coefficient of `u^k` equals that of
//! `u^{-k}`), and on the palindromic subring the change of variable
//! `c = u + u^{-1}` makes Euclidean division by `(2 + c)^g` well defined.
//! The quotient ring is handled through the substitution `u = ε - 1`, which
//! identifies it with `Z[ε]/ε^{2g}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Genus and curve-type parameters every ring computation depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveContext {
    g: u32,
    hyperelliptic: bool,
}

impl CurveContext {
    /// Requires genus at least 2. Comparisons against the representation
    /// ring additionally require genus at least 3 and check it themselves.
    pub fn new(g: u32, hyperelliptic: bool) -> Result<Self> {
        if g < 2 {
            return Err(Error::OutOfRange(format!("genus must be >= 2, got {}", g)));
        }
        Ok(CurveContext { g, hyperelliptic })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.hyperelliptic
    }

    /// `χ = 2g - 2`, the cutoff above which classes vanish.
    pub fn chi(&self) -> u32 {
        2 * self.g - 2
    }

    /// Rank parameter of the special linear group, `N = 2g - 2`.
    pub fn sl_rank(&self) -> u32 {
        2 * self.g - 2
    }

    /// Rank parameter of the symplectic group, `m = g - 1`.
    pub fn sp_rank(&self) -> u32 {
        self.g - 1
    }
}

impl fmt::Display for CurveContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={}{}",
            self.g,
            if self.hyperelliptic {
                " hyperelliptic"
            } else {
                ""
            }
        )
    }
}

/// Integer Laurent polynomial in `u`; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exponent) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Highest exponent with nonzero coefficient.
    pub fn deg_plus(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn deg_minus(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Substitution `u -> u^{-1}`.
    pub fn reversed(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&k, c)| self.coeffs.get(&-k) == Some(c))
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scaled(&self, factor: &BigInt) -> LaurentPoly {
        if factor.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k, c * factor))
                .collect(),
        }
    }

    pub fn shifted(&self, by: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k + by, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at an integer `u_0 != 0`; negative exponents make
    /// the value rational.
    pub fn evaluate(&self, u0: i64) -> Result<BigRational> {
        if u0 == 0 {
            return Err(Error::OutOfRange(
                "cannot evaluate a Laurent polynomial at u = 0".into(),
            ));
        }
        let base = BigRational::from_integer(BigInt::from(u0));
        let mut total = BigRational::zero();
        for (&k, c) in &self.coeffs {
            let mut term = BigRational::from_integer(c.clone());
            if k >= 0 {
                for _ in 0..k {
                    term *= &base;
                }
            } else {
                for _ in 0..(-k) {
                    term /= &base;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation at `u = -1` or `u = 1`, always an integer.
    pub fn evaluate_at_sign(&self, u0: i64) -> BigInt {
        debug_assert!(u0 == 1 || u0 == -1);
        let mut total = BigInt::zero();
        for (&k, c) in &self.coeffs {
            if u0 == 1 || k % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        total
    }

    /// Quantum integer `[n]_t = u^{n-1} + u^{n-3} + … + u^{1-n}`, the graded
    /// dimension of an `n`-dimensional Lefschetz string.
    pub fn quantum_integer(n: u32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for k in 0..n {
            p.add_term(n as i64 - 1 - 2 * k as i64, BigInt::one());
        }
        p
    }

    /// Coefficients `(a_0, …, a_d)` with `p = Σ a_k P_k`, where `P_0 = 1`
    /// and `P_k = u^k + u^{-k}`. Errors on non-palindromic input.
    pub fn to_c_basis(&self) -> Result<Vec<BigInt>> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let mut rest = self.clone();
        let deg = rest.deg_plus().unwrap_or(0).max(0) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for k in (1..=deg).rev() {
            let a = rest.coeff(k as i64);
            if !a.is_zero() {
                rest.add_term(k as i64, -a.clone());
                rest.add_term(-(k as i64), -a.clone());
                out[k] = a;
            }
        }
        out[0] = rest.coeff(0);
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        if out.len() == 1 && out[0].is_zero() {
            out.clear();
        }
        Ok(out)
    }

    /// Inverse of [`to_c_basis`](Self::to_c_basis).
    pub fn from_c_basis(coeffs: &[BigInt]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if k == 0 {
                p.add_term(0, a.clone());
            } else {
                p.add_term(k as i64, a.clone());
                p.add_term(-(k as i64), a.clone());
            }
        }
        p
    }

    /// Writes a palindromic `p` as a polynomial in `c = u + u^{-1}`,
    /// returned as power-basis coefficients `[c^0, c^1, …]`.
    fn to_c_powers(&self) -> Result<Vec<BigInt>> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let mut rest = self.clone();
        let deg = rest.deg_plus().unwrap_or(0).max(0) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        let c = LaurentPoly::from_terms([(1, BigInt::one()), (-1, BigInt::one())]);
        let mut c_powers = Vec::with_capacity(deg + 1);
        let mut acc = LaurentPoly::one();
        for _ in 0..=deg {
            c_powers.push(acc.clone());
            acc = &acc * &c;
        }
        while let Some(d) = rest.deg_plus() {
            if d < 0 {
                return Err(Error::InternalConsistency(
                    "palindromic polynomial with negative top degree".into(),
                ));
            }
            let lead = rest.coeff(d);
            rest -= &c_powers[d as usize].scaled(&lead);
            out[d as usize] += lead;
        }
        Ok(out)
    }

    fn from_c_powers(coeffs: &[BigInt]) -> LaurentPoly {
        let c = LaurentPoly::from_terms([(1, BigInt::one()), (-1, BigInt::one())]);
        let mut acc = LaurentPoly::one();
        let mut out = LaurentPoly::zero();
        for a in coeffs {
            out += &acc.scaled(a);
            acc = &acc * &c;
        }
        out
    }

    /// `(2 + c)^g = u^{-g}(1 + u)^{2g}`, the Betti polynomial of the
    /// constant perverse sheaf; the divisor for the perverse decomposition.
    pub fn h_constant(ctx: &CurveContext) -> LaurentPoly {
        let g = ctx.genus() as i64;
        let mut p = LaurentPoly::zero();
        let mut b = BigInt::one();
        for k in 0..=(2 * g) {
            p.add_term(k - g, b.clone());
            // next binomial coefficient C(2g, k+1)
            b = &b * BigInt::from(2 * g - k) / BigInt::from(k + 1);
        }
        p
    }

    /// Euclidean division of a palindromic polynomial by `(2 + c)^g` in the
    /// palindromic subring: `self = quotient · (2+c)^g + remainder` with the
    /// remainder of `c`-degree below `g` (so `u`-degree at most `g-1`).
    pub fn divide_by_h_constant(&self, ctx: &CurveContext) -> Result<(LaurentPoly, LaurentPoly)> {
        let g = ctx.genus() as usize;
        let mut dividend = self.to_c_powers()?;
        // (2 + c)^g in powers of c
        let mut divisor = vec![BigInt::zero(); g + 1];
        let mut b = BigInt::one();
        for (k, slot) in divisor.iter_mut().enumerate() {
            // C(g, k) * 2^(g-k)
            *slot = &b << (g - k);
            b = &b * BigInt::from((g - k) as i64) / BigInt::from((k + 1) as i64);
        }
        let mut quotient = vec![BigInt::zero(); dividend.len().saturating_sub(g) + 1];
        while dividend.len() > g && dividend.iter().skip(g).any(|x| !x.is_zero()) {
            let d = dividend.len() - 1;
            let lead = dividend[d].clone();
            if lead.is_zero() {
                dividend.pop();
                continue;
            }
            let shift = d - g;
            for (k, c) in divisor.iter().enumerate() {
                dividend[shift + k] -= &lead * c;
            }
            quotient[shift] += lead;
            dividend.pop();
        }
        Ok((
            LaurentPoly::from_c_powers(&quotient),
            LaurentPoly::from_c_powers(&dividend),
        ))
    }

    /// Canonical image in `Z[u,u^{-1}]/(u + 2 + u^{-1})^g ≅ Z[ε]/ε^{2g}`
    /// under `u = ε - 1`. Works for arbitrary (not necessarily palindromic)
    /// input, since `u` is a unit of the quotient.
    pub fn reduce_mod_ideal(&self, ctx: &CurveContext) -> EpsilonPoly {
        let n = 2 * ctx.genus() as usize;
        let mut acc = vec![BigInt::zero(); n];
        if self.is_zero() {
            return EpsilonPoly::new(n, acc);
        }
        // u = ε - 1 and u^{-1} = -(1 + ε + ε² + …) truncated at ε^n
        let u_pos: Vec<BigInt> = vec![-BigInt::one(), BigInt::one()];
        let u_neg: Vec<BigInt> = vec![-BigInt::one(); n];
        let lo = self.deg_minus().unwrap();
        let hi = self.deg_plus().unwrap();
        // walk exponents from lo to hi, keeping a running power of u
        let mut power = trunc_pow(if lo >= 0 { &u_pos } else { &u_neg }, lo.unsigned_abs(), n);
        for k in lo..=hi {
            let c = self.coeff(k);
            if !c.is_zero() {
                for (i, p) in power.iter().enumerate() {
                    acc[i] += &c * p;
                }
            }
            if k < hi {
                power = trunc_mul(&power, &u_pos, n);
            }
        }
        EpsilonPoly::new(n, acc)
    }
}

fn trunc_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= n {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn trunc_pow(base: &[BigInt], e: u64, n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n];
    acc[0] = BigInt::one();
    for _ in 0..e {
        acc = trunc_mul(&acc, base, n);
    }
    acc
}

/// An element of `Z[ε]/ε^{2g}`, the canonical form of the quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonPoly {
    modulus: usize,
    coeffs: Vec<BigInt>,
}

impl EpsilonPoly {
    fn new(modulus: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.truncate(modulus);
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        EpsilonPoly { modulus, coeffs }
    }

    /// Truncation order `2g`.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &EpsilonPoly) -> EpsilonPoly {
        assert_eq!(self.modulus, other.modulus);
        let mut coeffs = vec![BigInt::zero(); self.modulus];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        EpsilonPoly::new(self.modulus, coeffs)
    }

    pub fn sub(&self, other: &EpsilonPoly) -> EpsilonPoly {
        assert_eq!(self.modulus, other.modulus);
        let mut coeffs = vec![BigInt::zero(); self.modulus];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        EpsilonPoly::new(self.modulus, coeffs)
    }

    pub fn mul(&self, other: &EpsilonPoly) -> EpsilonPoly {
        assert_eq!(self.modulus, other.modulus);
        EpsilonPoly::new(
            self.modulus,
            trunc_mul(&self.coeffs, &other.coeffs, self.modulus),
        )
    }
}

// --- operator impls -----------------------------------------------------

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// `u^3 + 4*u + 4*u^-1 + u^-3`; the exponent-0 term prints as a bare
    /// integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.coeffs.iter().rev() {
            let negative = c.is_negative();
            let mag = c.magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k != 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if k != 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "u")?;
                } else {
                    write!(f, "u^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: u32) -> LaurentPoly {
        LaurentPoly::quantum_integer(n)
    }

    fn ctx(g: u32) -> CurveContext {
        CurveContext::new(g, false).unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert!(qi(0).is_zero());
        assert_eq!(qi(1), LaurentPoly::one());
        assert_eq!(
            qi(2),
            LaurentPoly::from_terms([(1, 1.into()), (-1, 1.into())])
        );
        assert_eq!(
            qi(4),
            LaurentPoly::from_terms([
                (3, 1.into()),
                (1, 1.into()),
                (-1, 1.into()),
                (-3, 1.into())
            ])
        );
        for n in 0..9i64 {
            let p = qi(n as u32);
            assert!(p.is_palindromic());
            assert_eq!(p.evaluate_at_sign(1), BigInt::from(n));
            let expect = if n % 2 == 0 { -n } else { n };
            assert_eq!(p.evaluate_at_sign(-1), BigInt::from(expect));
        }
    }

    #[test]
    fn palindromic_detection() {
        assert!(qi(2).is_palindromic());
        assert!(LaurentPoly::from_terms([(2, 1.into()), (0, 3.into()), (-2, 1.into())])
            .is_palindromic());
        assert!(!LaurentPoly::monomial(1, 1).is_palindromic());
        assert!(LaurentPoly::zero().is_palindromic());
    }

    #[test]
    fn c_basis_examples() {
        assert_eq!(qi(2).to_c_basis().unwrap(), vec![BigInt::zero(), BigInt::one()]);
        // u² + 2 + u^-2 = P_2 + 2 P_0
        let p = LaurentPoly::from_terms([(2, 1.into()), (0, 2.into()), (-2, 1.into())]);
        assert_eq!(
            p.to_c_basis().unwrap(),
            vec![BigInt::from(2), BigInt::zero(), BigInt::one()]
        );
        assert_eq!(
            LaurentPoly::constant(5).to_c_basis().unwrap(),
            vec![BigInt::from(5)]
        );
        assert!(LaurentPoly::monomial(1, 1).to_c_basis().is_err());
        assert!(LaurentPoly::zero().to_c_basis().unwrap().is_empty());
    }

    #[test]
    fn h_constant_small_genus() {
        // g = 2: u^-2 (1+u)^4
        let h = LaurentPoly::h_constant(&ctx(2));
        let expect = LaurentPoly::from_terms([
            (2, 1.into()),
            (1, 4.into()),
            (0, 6.into()),
            (-1, 4.into()),
            (-2, 1.into()),
        ]);
        assert_eq!(h, expect);
        for g in 2..6u32 {
            let h = LaurentPoly::h_constant(&ctx(g));
            assert!(h.is_palindromic());
            assert_eq!(h.evaluate_at_sign(1), BigInt::from(4).pow(g));
            assert_eq!(h.evaluate_at_sign(-1), BigInt::zero());
            assert_eq!(h.deg_plus(), Some(g as i64));
        }
    }

    #[test]
    fn division_inverts_construction() {
        let g3 = ctx(3);
        let h = LaurentPoly::h_constant(&g3);
        // p = [2]_t (2+c)^g + (u + 5 + u^-1)
        let rem = LaurentPoly::from_terms([(1, 1.into()), (0, 5.into()), (-1, 1.into())]);
        let p = &(&qi(2) * &h) + &rem;
        let (q, r) = p.divide_by_h_constant(&g3).unwrap();
        assert_eq!(q, qi(2));
        assert_eq!(r, rem);

        let (q, r) = h.divide_by_h_constant(&g3).unwrap();
        assert_eq!(q, LaurentPoly::one());
        assert!(r.is_zero());

        // already reduced
        let small = LaurentPoly::from_terms([(2, 3.into()), (0, 1.into()), (-2, 3.into())]);
        let (q, r) = small.divide_by_h_constant(&g3).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert!(LaurentPoly::monomial(2, 1).divide_by_h_constant(&g3).is_err());
    }

    #[test]
    fn quotient_ring_reduction() {
        for g in 2..5u32 {
            let cx = ctx(g);
            let gen = LaurentPoly::from_terms([(1, 1.into()), (0, 2.into()), (-1, 1.into())]);
            assert!(gen.pow(g).reduce_mod_ideal(&cx).is_zero());
            assert!(!gen.pow(g - 1).reduce_mod_ideal(&cx).is_zero());
            assert!(!LaurentPoly::one().reduce_mod_ideal(&cx).is_zero());
            assert!(LaurentPoly::h_constant(&cx).reduce_mod_ideal(&cx).is_zero());
        }
    }

    #[test]
    fn reduction_is_a_ring_homomorphism() {
        let cx = ctx(3);
        let samples = [
            LaurentPoly::from_terms([(3, 2.into()), (0, (-1).into()), (-2, 5.into())]),
            qi(5),
            LaurentPoly::monomial(-4, 7),
            LaurentPoly::from_terms([(1, 1.into()), (0, 1.into())]),
        ];
        for a in &samples {
            for b in &samples {
                let ra = a.reduce_mod_ideal(&cx);
                let rb = b.reduce_mod_ideal(&cx);
                assert_eq!((a + b).reduce_mod_ideal(&cx), ra.add(&rb));
                assert_eq!((a * b).reduce_mod_ideal(&cx), ra.mul(&rb));
            }
        }
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_terms([(1, 3.into()), (-1, 1.into())]);
        // 3·2 + 1/2 = 13/2
        let v = p.evaluate(2).unwrap();
        assert_eq!(v, BigRational::new(13.into(), 2.into()));
        assert!(p.evaluate(0).is_err());
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly::from_terms([
            (3, 1.into()),
            (1, 4.into()),
            (-1, 4.into()),
            (-3, 1.into()),
        ]);
        assert_eq!(p.to_string(), "u^3 + 4*u + 4*u^-1 + u^-3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(-7).to_string(), "-7");
        let q = LaurentPoly::from_terms([(2, 1.into()), (0, (-3).into())]);
        assert_eq!(q.to_string(), "u^2 - 3");
    }
}
