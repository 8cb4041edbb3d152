//! Exhaustive computation over all `2^n - 1` nonempty vertex subsets.
//!
//! Each subset is tested for induced connectivity by a frontier search
//! restricted to the subset, then its exact index is the minimum of
//! `2 deg_S(v) - deg(v)` over its members. The subset range may be split into
//! contiguous chunks evaluated on a thread pool; per-chunk counts are summed,
//! so the result does not depend on the partitioning.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{mask_alliance_index, AlliancePolynomial};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order enumerated without an explicit override.
pub const BRUTE_FORCE_GUARD: usize = 26;
/// Hard ceiling: subsets are enumerated as `u64` bit patterns.
const HARD_LIMIT: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComputeOptions {
    /// Number of contiguous work partitions, each run on its own worker.
    pub threads: usize,
    /// Lifts [`BRUTE_FORCE_GUARD`].
    pub force: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            threads: 1,
            force: false,
        }
    }
}

impl ComputeOptions {
    pub fn threads(threads: usize) -> Self {
        ComputeOptions {
            threads,
            ..Default::default()
        }
    }
}

pub(crate) fn check_guard(what: &'static str, order: usize, force: bool) -> Result<()> {
    if order == 0 {
        return Err(Error::BelowBound {
            family: "graph",
            parameter: "order",
            min: 1,
            got: 0,
        });
    }
    if order > HARD_LIMIT {
        return Err(Error::OrderTooLarge {
            order,
            max: HARD_LIMIT,
        });
    }
    if order > BRUTE_FORCE_GUARD && !force {
        return Err(Error::GuardExceeded {
            what,
            order,
            limit: BRUTE_FORCE_GUARD,
        });
    }
    Ok(())
}

/// Counts indexed by `k + n` over subsets `lo..hi`.
fn count_range(g: &Graph, lo: u64, hi: u64) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; 2 * n + 1];
    for mask in lo..hi {
        if g.mask_is_connected(mask) {
            let k = mask_alliance_index(g, mask);
            counts[(k + n as i64) as usize] += 1;
        }
    }
    counts
}

fn chunk_bounds(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = parts.max(1) as u64;
    let span = total - 1;
    (0..parts)
        .map(|i| (1 + span * i / parts, 1 + span * (i + 1) / parts))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

pub fn alliance_polynomial(g: &Graph) -> Result<AlliancePolynomial> {
    alliance_polynomial_with(g, &ComputeOptions::default())
}

pub fn alliance_polynomial_with(g: &Graph, opts: &ComputeOptions) -> Result<AlliancePolynomial> {
    check_guard("alliance polynomial", g.order(), opts.force)?;
    let n = g.order();
    let total = 1u64 << n;
    let chunks = chunk_bounds(total, opts.threads);
    let partials: Vec<Vec<u64>> = if opts.threads <= 1 {
        chunks
            .iter()
            .map(|&(lo, hi)| count_range(g, lo, hi))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
        pool.install(|| {
            chunks
                .par_iter()
                .map(|&(lo, hi)| count_range(g, lo, hi))
                .collect()
        })
    };
    let mut merged = vec![0u64; 2 * n + 1];
    for part in partials {
        for (slot, c) in merged.iter_mut().zip(part) {
            *slot += c;
        }
    }
    let coeffs: BTreeMap<i64, BigUint> = merged
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(i, c)| (i as i64 - n as i64, BigUint::from(c)))
        .collect();
    AlliancePolynomial::new(n, coeffs)
}

/// Connected induced subgraphs and cut vertex sets counted by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeCounts {
    /// `s[r]`, `0 <= r <= n`: connected induced subgraphs on `r` vertices
    /// (`s[0] = 0`).
    pub s: Vec<u64>,
    /// `c[j]`, `0 <= j < n`: cut vertex sets of cardinality `j`.
    pub c: Vec<u64>,
}

impl SizeCounts {
    pub fn connected_total(&self) -> u64 {
        self.s.iter().sum()
    }

    pub fn cut_total(&self) -> u64 {
        self.c.iter().sum()
    }
}

pub fn size_counts(g: &Graph) -> Result<SizeCounts> {
    size_counts_with(g, false)
}

pub fn size_counts_with(g: &Graph, force: bool) -> Result<SizeCounts> {
    check_guard("size counts", g.order(), force)?;
    let n = g.order();
    let mut s = vec![0u64; n + 1];
    for mask in 1..(1u64 << n) {
        if g.mask_is_connected(mask) {
            s[mask.count_ones() as usize] += 1;
        }
    }
    let c = (0..n).map(|j| binomial_u64(n, n - j) - s[n - j]).collect();
    Ok(SizeCounts { s, c })
}

pub(crate) fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
