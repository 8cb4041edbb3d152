//! Brute-force canonical labelling and isomorphism-free enumeration.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency bit string, read in graph6 column order, over all
//! vertex permutations. The search assigns canonical positions one at a time
//! and abandons a branch as soon as its prefix exceeds the best string seen,
//! which keeps the exact minimum while skipping most of the `n!` leaves.

use rayon::prelude::*;

use super::{Bits, Graph};
use crate::{Error, Result};

/// Largest order canonicalised without an explicit override.
pub const CANON_GUARD: usize = 8;
/// Largest order whose bit string fits the 64-bit search key.
pub const CANON_MAX_ORDER: usize = 11;
/// Largest order enumerated without an explicit override.
pub const ENUMERATE_GUARD: usize = 7;

/// Order byte followed by the minimal bit string, packed most significant
/// bit first. Equal forms mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    fn from_key(order: usize, key: u64) -> Self {
        let total = pair_count(order);
        let mut bytes = Vec::with_capacity(1 + total.div_ceil(8));
        bytes.push(order as u8);
        let mut remaining = total;
        while remaining > 0 {
            let take = remaining.min(8);
            let chunk = (key >> (remaining - take)) & ((1u64 << take) - 1);
            bytes.push((chunk << (8 - take)) as u8);
            remaining -= take;
        }
        CanonicalForm(bytes)
    }

    /// The graph whose labelled adjacency is exactly this form.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = pair_count(n);
        let mut key = 0u64;
        for k in 0..total {
            let bit = self.0[1 + k / 8] >> (7 - k % 8) & 1;
            key = key << 1 | bit as u64;
        }
        graph_from_key(n, key)
    }
}

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Key of the labelled graph itself: bit `(i, j)`, `i < j`, in graph6 column
/// order, first pair most significant.
pub(crate) fn labelled_key(g: &Graph) -> u64 {
    let mut key = 0u64;
    for j in 1..g.order() {
        let col = g.neighbors(j);
        for i in 0..j {
            key = key << 1 | (col >> i & 1);
        }
    }
    key
}

pub(crate) fn graph_from_key(n: usize, key: u64) -> Graph {
    let total = pair_count(n);
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

struct MinSearch<'a> {
    adj: &'a [u64],
    n: usize,
    total: usize,
    best: u64,
    /// Stop at the first strictly smaller string.
    stop_on_smaller: bool,
    found_smaller: bool,
    pos: [usize; CANON_MAX_ORDER],
}

impl MinSearch<'_> {
    fn run(&mut self, depth: usize, used: u64, cur: u64) {
        if depth == self.n {
            if cur < self.best {
                self.best = cur;
            }
            return;
        }
        let free = !used & ((1u64 << self.n) - 1);
        let nbits = pair_count(depth + 1);
        for v in Bits(free) {
            let mut col = 0u64;
            for i in 0..depth {
                col = col << 1 | (self.adj[self.pos[i]] >> v & 1);
            }
            let next = cur << depth | col;
            let prefix = self.best >> (self.total - nbits);
            if next > prefix {
                continue;
            }
            if next < prefix && self.stop_on_smaller {
                self.found_smaller = true;
                return;
            }
            self.pos[depth] = v;
            self.run(depth + 1, used | 1 << v, next);
            if self.found_smaller {
                return;
            }
        }
    }
}

fn min_key(g: &Graph) -> u64 {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let mut search = MinSearch {
        adj: g.adjacency(),
        n,
        total: pair_count(n),
        best: labelled_key(g),
        stop_on_smaller: false,
        found_smaller: false,
        pos: [0; CANON_MAX_ORDER],
    };
    search.run(0, 0, 0);
    search.best
}

/// True when no relabelling of `g` has a smaller bit string, i.e. `g` is
/// the canonical representative of its class.
pub(crate) fn is_canonical_labelling(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut search = MinSearch {
        adj: g.adjacency(),
        n,
        total: pair_count(n),
        best: labelled_key(g),
        stop_on_smaller: true,
        found_smaller: false,
        pos: [0; CANON_MAX_ORDER],
    };
    search.run(0, 0, 0);
    !search.found_smaller
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with(g, false)
}

/// `force` lifts the order guard up to the 64-bit key limit of 11 vertices.
pub fn canonical_form_with(g: &Graph, force: bool) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: CANON_MAX_ORDER,
        });
    }
    if n > CANON_GUARD && !force {
        return Err(Error::GuardExceeded {
            what: "canonical form",
            order: n,
            limit: CANON_GUARD,
        });
    }
    Ok(CanonicalForm::from_key(n, min_key(g)))
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, ordered by canonical form. Runs on the current rayon pool.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    enumerate_nonisomorphic_with(n, false)
}

/// `force` allows `n = 8` (2^28 labelled graphs).
pub fn enumerate_nonisomorphic_with(n: usize, force: bool) -> Result<Vec<Graph>> {
    if n > CANON_GUARD {
        return Err(Error::GuardExceeded {
            what: "enumeration",
            order: n,
            limit: CANON_GUARD,
        });
    }
    if n > ENUMERATE_GUARD && !force {
        return Err(Error::GuardExceeded {
            what: "enumeration",
            order: n,
            limit: ENUMERATE_GUARD,
        });
    }
    let total: u64 = 1 << pair_count(n);
    const BLOCK: u64 = 1 << 12;
    let blocks = total.div_ceil(BLOCK);
    let mut keys: Vec<u64> = (0..blocks)
        .into_par_iter()
        .flat_map_iter(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(total);
            (lo..hi).filter(move |&key| is_canonical_labelling(&graph_from_key(n, key)))
        })
        .collect();
    keys.sort_unstable();
    Ok(keys.into_iter().map(|k| graph_from_key(n, k)).collect())
}
