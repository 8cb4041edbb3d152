use std::collections::BTreeMap;
use std::fmt;

use super::check_order;
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest edge count accepted by [`tutte_polynomial`].
pub const TUTTE_EDGE_GUARD: usize = 16;

/// Polynomial in `x` and `y` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(i: u32, j: u32, c: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: u64) {
        if c != 0 {
            *self.terms.entry((i, j)).or_insert(0) += c;
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> u64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign(&mut self, other: &BivariatePoly) {
        for (&(i, j), &c) in &other.terms {
            self.add_term(i, j, c);
        }
    }

    fn shifted(&self, di: u32, dj: u32) -> BivariatePoly {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((i + di, j + dj), c))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: i64, y: i64) -> i128 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c as i128 * (x as i128).pow(i) * (y as i128).pow(j))
            .sum()
    }
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Highest total degree first, e.g. `x^2 + x + y`.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| {
            let (ia, ja) = *a.0;
            let (ib, jb) = *b.0;
            (ib + jb, ib).cmp(&(ia + ja, ia))
        });
        let parts: Vec<String> = keys
            .into_iter()
            .map(|(&(i, j), &c)| {
                let mono = format!("{}{}", power("x", i), power("y", j));
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn is_bridge(order: usize, edges: &[(usize, usize)], skip: usize) -> bool {
    let (a, b) = edges[skip];
    let mut adj = vec![Vec::new(); order];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        if idx != skip && u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; order];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return false;
        }
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

fn deletion_contraction(order: usize, edges: Vec<(usize, usize)>) -> BivariatePoly {
    let loops = edges.iter().filter(|(u, v)| u == v).count() as u32;
    let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
    let Some(e) = (0..edges.len()).find(|&i| !is_bridge(order, &edges, i)) else {
        return BivariatePoly::monomial(edges.len() as u32, loops, 1);
    };
    let (keep, gone) = edges[e];
    let mut deleted = edges.clone();
    deleted.remove(e);
    let contracted: Vec<_> = deleted
        .iter()
        .map(|&(u, v)| {
            let r = |w: usize| if w == gone { keep } else { w };
            (r(u), r(v))
        })
        .collect();
    let mut t = deletion_contraction(order, deleted);
    t.add_assign(&deletion_contraction(order, contracted));
    t.shifted(0, loops)
}

/// Tutte polynomial of a multigraph given as an edge list; loops allowed.
/// The recursion always picks the lowest-index edge that is neither a loop
/// nor a bridge, so permuting `edges` exercises different recursion trees.
pub fn tutte_polynomial_of_multigraph(
    order: usize,
    edges: &[(usize, usize)],
) -> Result<BivariatePoly> {
    if edges.len() > TUTTE_EDGE_GUARD {
        return Err(Error::GuardExceeded {
            what: "Tutte polynomial (edges)",
            order: edges.len(),
            limit: TUTTE_EDGE_GUARD,
        });
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u.max(v) >= order) {
        return Err(Error::VertexOutOfRange {
            vertex: u.max(v),
            order,
        });
    }
    Ok(deletion_contraction(order, edges.to_vec()))
}

pub fn tutte_polynomial(g: &Graph) -> Result<BivariatePoly> {
    tutte_polynomial_of_multigraph(g.order(), &g.edges())
}

/// Coefficient of `x^i y^j` counts vertex subsets of size `i` inducing `j`
/// components.
pub fn subgraph_component_polynomial(g: &Graph) -> Result<BivariatePoly> {
    check_order("subgraph component polynomial", g)?;
    let mut q = BivariatePoly::zero();
    for mask in 0..=g.vertex_mask() {
        let comps = g.components_in(mask).len() as u32;
        q.add_term(mask.count_ones(), comps, 1);
    }
    Ok(q)
}
