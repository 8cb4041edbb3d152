//! Graph operations: unions, joins, complements, products, deletions.
//!
//! Binary operations label the first operand's vertices first. Products label
//! the pair `(a, b)` as `a * |V(h)| + b`.

use super::{mask_of, Bits, Graph, MAX_ORDER};
use crate::{Error, Result};

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// `G ∪ H` on vertices `0..n_g` then `n_g..n_g + n_h`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.order();
    check_order(shift + h.order())?;
    let adj = g
        .adjacency()
        .iter()
        .copied()
        .chain(h.adjacency().iter().map(|&a| a << shift))
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `G ⊎ H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng + nh)?;
    let right = mask_of(nh) << ng;
    let adj = g
        .adjacency()
        .iter()
        .map(|&a| a | right)
        .chain(h.adjacency().iter().map(|&a| a << ng | mask_of(ng)))
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn complement(g: &Graph) -> Graph {
    let full = g.vertex_mask();
    let adj = g
        .adjacency()
        .iter()
        .enumerate()
        .map(|(v, &a)| !a & full & !(1u64 << v))
        .collect();
    Graph::from_adjacency_unchecked(adj)
}

/// `G ∪ {v}` with the new vertex labelled `n`.
pub fn add_isolated_vertex(g: &Graph) -> Result<Graph> {
    check_order(g.order() + 1)?;
    let mut adj = g.adjacency().to_vec();
    adj.push(0);
    Ok(Graph::from_adjacency_unchecked(adj))
}

fn product(g: &Graph, h: &Graph, strong: bool) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng * nh)?;
    let mut adj = vec![0u64; ng * nh];
    for a in 0..ng {
        for b in 0..nh {
            let here = a * nh + b;
            // same first coordinate, adjacent second
            for b2 in Bits(h.neighbors(b)) {
                adj[here] |= 1 << (a * nh + b2);
            }
            for a2 in Bits(g.neighbors(a)) {
                // adjacent first coordinate, same second
                adj[here] |= 1 << (a2 * nh + b);
                if strong {
                    for b2 in Bits(h.neighbors(b)) {
                        adj[here] |= 1 << (a2 * nh + b2);
                    }
                }
            }
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, false)
}

/// `G ⊠ H`: the Cartesian edges plus pairs adjacent in both coordinates.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, true)
}

/// `G - e`. Removing a non-edge returns an unchanged copy.
pub fn remove_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: g.order(),
            });
        }
    }
    let mut adj = g.adjacency().to_vec();
    adj[u] &= !(1u64 << v);
    adj[v] &= !(1u64 << u);
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `G - v`, relabelling later vertices down by one.
pub fn remove_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(g.induced_subgraph(g.vertex_mask() & !(1u64 << v)))
}
