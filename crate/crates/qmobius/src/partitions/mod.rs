//! Partition statistics along two independent routes.
//!
//! The [`Oracle`] enumerates partitions outright and counts by inspection —
//! the combinatorial ground truth, capped by a configurable limit. The
//! `count` submodule computes the same statistics by recurrence or
//! generating function with no such cap, and `gf` builds every generating
//! function in series form. Tests pin the routes against each other wherever
//! both are defined.

mod count;
mod gf;

pub use count::{
    by_parts_table, count_by_parts, count_by_parts_hat, count_partitions, distinct_counts,
    partition_numbers, uniform_multiplicity_counts,
};
pub use gf::{
    series_b, series_b_hat, series_fq, series_fq_hat, series_p, series_pa, series_pa_hat,
    series_psi_q,
};

use std::fmt;

use num::BigInt;

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates weak decrease and positivity.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn durfee_profile(&self) -> DurfeeProfile {
        durfee_profile(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Durfee geometry of a Ferrers diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DurfeeProfile {
    /// Side of the Durfee square: the largest `k` with at least `k` parts of
    /// size ≥ `k` (0 for the empty partition).
    pub square: u32,
    /// Height `M` of the tallest Durfee rectangle below the square: the
    /// largest `m` such that part number `square + m` exists and is ≥
    /// `square`. Rectangles nest, so an `n×m` rectangle exists for every
    /// `1 ≤ m ≤ M`. Zero when the square is empty.
    pub max_rectangle_height: u32,
}

/// Profile of a raw weakly-decreasing parts slice.
pub fn durfee_profile(parts: &[u32]) -> DurfeeProfile {
    let mut square = 0u32;
    while (square as usize) < parts.len() && parts[square as usize] > square {
        square += 1;
    }
    let mut height = 0u32;
    if square > 0 {
        while ((square + height) as usize) < parts.len()
            && parts[(square + height) as usize] >= square
        {
            height += 1;
        }
    }
    DurfeeProfile {
        square,
        max_rectangle_height: height,
    }
}

/// Default cap on brute-force enumeration (p(60) ≈ 10⁶ partitions).
pub const DEFAULT_ORACLE_LIMIT: u32 = 60;

/// Brute-force enumeration oracle with a weight cap.
///
/// Every counter here works by generating the partitions of `n` and
/// inspecting them, nothing else; these are the reference values the
/// recurrence and generating-function routes are tested against.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: u32) -> Self {
        Oracle { limit }
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    fn check(&self, n: u32) -> Result<()> {
        if n > self.limit {
            Err(Error::OracleLimitExceeded {
                n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Streams every partition of `n` (as a parts slice) exactly once, in
    /// lexicographically decreasing order. The buffer is reused between
    /// callbacks; clone it to keep a partition.
    pub fn for_each_partition(&self, n: u32, mut f: impl FnMut(&[u32])) -> Result<()> {
        self.check(n)?;
        let mut buf = Vec::with_capacity(n as usize);
        visit(n, n, &mut buf, &mut f);
        Ok(())
    }

    /// All partitions of `n`, lexicographically decreasing; `[[]]` for n = 0.
    pub fn enumerate(&self, n: u32) -> Result<Vec<Partition>> {
        let mut out = Vec::new();
        self.for_each_partition(n, |parts| {
            out.push(Partition {
                parts: parts.to_vec(),
            })
        })?;
        Ok(out)
    }

    /// p(n) by exhaustive generation.
    pub fn count_partitions(&self, n: u32) -> Result<BigInt> {
        let mut count = 0u64;
        self.for_each_partition(n, |_| count += 1)?;
        Ok(BigInt::from(count))
    }

    /// p_a(n): partitions of `n` into exactly `a` parts.
    pub fn count_by_parts(&self, a: u32, n: u32) -> Result<BigInt> {
        assert!(a >= 1);
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            if parts.len() == a as usize {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// p̂_a(n): partitions of `n` into `ak` parts for some `k ≥ 1`.
    pub fn count_by_parts_hat(&self, a: u32, n: u32) -> Result<BigInt> {
        assert!(a >= 1);
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            if !parts.is_empty() && parts.len() % a as usize == 0 {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// Q(n): partitions of `n` into distinct parts.
    pub fn count_distinct(&self, n: u32) -> Result<BigInt> {
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            if parts.windows(2).all(|w| w[0] > w[1]) {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// Q̂(n): partitions of `n` whose distinct part values all occur with the
    /// same multiplicity.
    pub fn count_uniform_multiplicity(&self, n: u32) -> Result<BigInt> {
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            if uniform_multiplicity(parts) {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// b_a(N): partitions of `N` with a nonempty Durfee square and at least
    /// an `n×a` Durfee rectangle below it.
    pub fn count_durfee(&self, a: u32, n: u32) -> Result<BigInt> {
        assert!(a >= 1);
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            let profile = durfee_profile(parts);
            if profile.square >= 1 && profile.max_rectangle_height >= a {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// b̂_a(N): as [`Oracle::count_durfee`] but counted with multiplicity —
    /// each partition contributes once per `k ≥ 1` with an `n×ak` rectangle,
    /// i.e. `⌊M/a⌋` where `M` is its maximal rectangle height.
    pub fn count_durfee_hat(&self, a: u32, n: u32) -> Result<BigInt> {
        assert!(a >= 1);
        let mut count = 0u64;
        self.for_each_partition(n, |parts| {
            let profile = durfee_profile(parts);
            count += (profile.max_rectangle_height / a) as u64;
        })?;
        Ok(BigInt::from(count))
    }
}

fn uniform_multiplicity(parts: &[u32]) -> bool {
    let mut expected = 0usize;
    let mut i = 0;
    while i < parts.len() {
        let mut run = 1;
        while i + run < parts.len() && parts[i + run] == parts[i] {
            run += 1;
        }
        if expected == 0 {
            expected = run;
        } else if run != expected {
            return false;
        }
        i += run;
    }
    true
}

fn visit(remaining: u32, max_part: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        f(buf);
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        buf.push(part);
        visit(remaining - part, part, buf, f);
        buf.pop();
    }
}
