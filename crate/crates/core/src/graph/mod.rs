//! Simple undirected graphs on at most 64 vertices, stored as one neighbour
//! bit pattern per vertex.

use std::fmt;

use crate::{Error, Result};

pub mod canon;
pub mod families;
pub mod io;
pub mod ops;

pub use canon::{canonical_form, canonical_form_with, enumerate_nonisomorphic, CanonicalForm};

/// Largest order representable with one `u64` neighbour mask per vertex.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn mask_of(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Iterator over the set bit positions of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Result<Self> {
        Self::new(order, &[])
    }

    /// Caller guarantees a symmetric, loop-free adjacency of length <= 64.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let size = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            order: adj.len(),
            adj,
            size,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// Neighbour bit patterns, one per vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Bit pattern with every vertex of the graph set.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        mask_of(self.order)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degrees sorted non-increasing: first entry is the maximum degree,
    /// last entry the minimum.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(|a| a.count_ones() as usize).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_in_set(&self, v: usize, set: &VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_universe(set)?;
        Ok((self.adj[v] & set.bits).count_ones() as usize)
    }

    /// Whether the subgraph induced by `set` is connected. A single vertex is
    /// connected; the empty set is an error.
    pub fn induced_is_connected(&self, set: &VertexSet) -> Result<bool> {
        self.check_universe(set)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.mask_is_connected(set.bits))
    }

    /// Graph search restricted to `mask`, expanding a whole frontier per step.
    /// `mask` must be nonzero.
    #[inline]
    pub(crate) fn mask_is_connected(&self, mask: u64) -> bool {
        let start = mask & mask.wrapping_neg();
        let mut reached = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !reached;
            reached |= next;
            frontier = next;
        }
        reached == mask
    }

    /// Vertex masks of the connected components inside `mask`.
    pub(crate) fn components_in(&self, mut mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while mask != 0 {
            let start = mask & mask.wrapping_neg();
            let mut reached = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !reached;
                reached |= next;
                frontier = next;
            }
            out.push(reached);
            mask &= !reached;
        }
        out
    }

    /// Vertex masks of the connected components of the whole graph.
    pub fn components(&self) -> Vec<u64> {
        self.components_in(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.mask_is_connected(self.vertex_mask())
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing
    /// order.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let adj = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &v)| self.adj[u] >> v & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order;
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::Permutation(format!(
                "length {} for order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::Permutation(format!(
                    "image {p} repeated or out of range"
                )));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for (u, &pu) in perm.iter().enumerate() {
            for v in Bits(self.adj[u]) {
                adj[pu] |= 1 << perm[v];
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    fn check_universe(&self, set: &VertexSet) -> Result<()> {
        if set.universe != self.order {
            return Err(Error::UniverseMismatch {
                set: set.universe,
                graph: self.order,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A subset of the vertices `0..universe` of some graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn from_bits(bits: u64, universe: usize) -> Result<Self> {
        if universe > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: universe,
                max: MAX_ORDER,
            });
        }
        if bits & !mask_of(universe) != 0 {
            let vertex = 63 - (bits & !mask_of(universe)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex,
                order: universe,
            });
        }
        Ok(VertexSet { bits, universe })
    }

    pub fn from_vertices(vertices: &[usize], universe: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= universe || v >= MAX_ORDER {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            bits |= 1 << v;
        }
        Self::from_bits(bits, universe)
    }

    pub fn full(universe: usize) -> Result<Self> {
        Self::from_bits(mask_of(universe.min(MAX_ORDER)), universe)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & mask_of(self.universe),
            universe: self.universe,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        Bits(self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn k33_is_cubic() {
        let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let g = Graph::new(6, &edges).unwrap();
        assert_eq!(g.size(), 9);
        for v in 0..6 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn duplicates_collapse_and_loops_fail() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert!(Graph::new(65, &[]).is_err());
        assert!(Graph::new(1, &[]).unwrap().degree(1).is_err());
    }

    #[test]
    fn degree_in_set_examples() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = VertexSet::from_vertices(&[0, 1], 4).unwrap();
        assert_eq!(c4.degree_in_set(0, &s).unwrap(), 1);
        assert_eq!(c4.degree_in_set(0, &s.complement()).unwrap(), 1);

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = VertexSet::from_vertices(&[0, 1, 2], 4).unwrap();
        assert_eq!(p4.degree_in_set(1, &s).unwrap(), 2);

        let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let k33 = Graph::new(6, &edges).unwrap();
        let part = VertexSet::from_vertices(&[0, 1, 2], 6).unwrap();
        assert_eq!(k33.degree_in_set(0, &part).unwrap(), 0);

        let wrong = VertexSet::from_vertices(&[0], 5).unwrap();
        assert!(p4.degree_in_set(0, &wrong).is_err());
    }

    #[test]
    fn connectivity_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let ends = VertexSet::from_vertices(&[0, 3], 4).unwrap();
        assert!(!p4.induced_is_connected(&ends).unwrap());
        let one = VertexSet::from_vertices(&[1], 4).unwrap();
        assert!(p4.induced_is_connected(&one).unwrap());
        let empty = VertexSet::from_bits(0, 4).unwrap();
        assert_eq!(p4.induced_is_connected(&empty), Err(Error::EmptySet));

        let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let k33 = Graph::new(6, &edges).unwrap();
        let same_part = VertexSet::from_vertices(&[0, 1], 6).unwrap();
        assert!(!k33.induced_is_connected(&same_part).unwrap());
    }

    #[test]
    fn vertex_set_masks() {
        assert!(VertexSet::from_bits(0b1000, 3).is_err());
        let s = VertexSet::from_bits(0b101, 3).unwrap();
        assert_eq!(s.complement().bits(), 0b010);
        assert_eq!(VertexSet::full(64).unwrap().complement().bits(), 0);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = p4.induced_subgraph(0b1110);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
