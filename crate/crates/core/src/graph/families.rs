//! Constructors for the named graph families, with fixed labellings.

use super::Graph;
use crate::{Error, Result};

fn at_least(family: &'static str, parameter: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::BelowBound {
            family,
            parameter,
            min,
            got,
        });
    }
    Ok(())
}

/// `P_n` with edges `(i, i + 1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", "n", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `C_n`: the path plus the edge `(n - 1, 0)`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", "n", 3, n)?;
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", "n", 1, n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

/// `E_n`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty", "n", 1, n)?;
    Graph::edgeless(n)
}

/// `S_n = K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", "n", 2, n)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges)
}

/// `K_{n,m}` with parts `0..n` and `n..n + m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph> {
    at_least("complete-bipartite", "n", 1, n)?;
    at_least("complete-bipartite", "m", 1, m)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (n..n + m).map(move |v| (u, v)))
        .collect();
    Graph::new(n + m, &edges)
}

/// `K_n / e`: the complete graph without the edge `(0, 1)`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    at_least("complete-minus-edge", "n", 2, n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&e| e != (0, 1))
        .collect();
    Graph::new(n, &edges)
}
