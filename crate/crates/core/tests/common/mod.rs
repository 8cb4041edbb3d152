//! Seeded graph generators and oracles that avoid the library's bitmask code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use alliance_poly::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with the given edge probability.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random spanning tree plus uniformly chosen extra edges, `m` edges total.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    let extra = m.saturating_sub(edges.len()).min(rest.len());
    edges.extend_from_slice(&rest[..extra]);
    Graph::new(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Depth-first search over a vertex list.
pub fn connected_on(adj: &[Vec<usize>], members: &[usize]) -> bool {
    let Some(&start) = members.first() else {
        return false;
    };
    let inside: Vec<bool> = (0..adj.len()).map(|v| members.contains(&v)).collect();
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == members.len()
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Alliance polynomial as exponent -> count, straight from the definition:
/// every connected induced subgraph contributes `x^(n + k)` with `k` the
/// minimum over its vertices of inside minus outside neighbours.
pub fn alliance_oracle(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut out = BTreeMap::new();
    for mask in 1u64..1 << n {
        let s = members(mask, n);
        if !connected_on(&adj, &s) {
            continue;
        }
        let k = s
            .iter()
            .map(|&v| {
                let inside = adj[v].iter().filter(|w| s.contains(w)).count() as i64;
                inside - (adj[v].len() as i64 - inside)
            })
            .min()
            .unwrap();
        *out.entry((n as i64 + k) as usize).or_insert(0) += 1;
    }
    out
}

pub fn connected_subsets_oracle(g: &Graph) -> u64 {
    alliance_oracle(g).values().sum()
}

/// Number of isomorphism classes of graphs on `n` vertices by Burnside's
/// lemma: average over permutations of 2^(cycles induced on vertex pairs).
pub fn burnside_class_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    loop {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (a, b) = pairs[i];
                i = index(perm[a], perm[b]);
            }
        }
        total += 1u128 << cycles;
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (total / count) as u64
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
