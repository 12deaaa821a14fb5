//! Partitions and Young diagrams.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! Partitions index irreducible representations of symmetric groups, the
//! classes `δ_α` of the convolution ring, and highest weights of the
//! classical groups, so everything in this crate speaks this type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition of degree 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts. Zeros are dropped; an increasing
    /// pair of parts is rejected.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let raw: Vec<u32> = parts.into_iter().collect();
        if raw.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {:?}",
                raw
            )));
        }
        Ok(Partition(raw.into_iter().filter(|&p| p > 0).collect()))
    }

    /// Single-row partition `(r)`; `r = 0` gives the empty partition.
    pub fn row(r: u32) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// Single-column partition `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition(vec![1; r as usize])
    }

    pub(crate) fn from_raw(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, `deg(α)`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = vec![0u32; cols];
        for (j, p) in parts.iter_mut().enumerate() {
            *p = self.0.iter().take_while(|&&x| x as usize > j).count() as u32;
        }
        Partition(parts)
    }

    /// Diagram containment: `inner_i <= self_i` for all rows.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula. Equals the dimension of the symmetric-group irreducible
    /// indexed by the shape.
    pub fn syt_count(&self) -> BigUint {
        let n = self.degree();
        let mut numerator = BigUint::one();
        for k in 1..=n {
            numerator *= BigUint::from(k);
        }
        let mut hooks = BigUint::one();
        let conj = self.conjugate();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        numerator / hooks
    }

    /// `(parts)` form used when printing ring elements: `(3,1)`, `()`.
    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Text syntax used by the CLI and JSON: comma-separated parts,
    /// `"0"` or `"[]"` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s == "[]" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty string".into()));
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {:?}", tok)))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!(
                "inner shape {} does not fit inside {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells of the skew diagram.
    pub fn cell_count(&self) -> u32 {
        self.outer.degree() - self.inner.degree()
    }
}

/// All partitions of `n`, largest part first within each partition,
/// ordered lexicographically descending (`(n)` first, `(1^n)` last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_raw(current.clone()));
            return;
        }
        let top = max_part.min(remaining);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of degree `0..=n`, ascending by degree.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
