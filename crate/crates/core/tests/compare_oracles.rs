mod common;

use alliance_poly::alliance::alliance_polynomial;
use alliance_poly::compare::{
    characteristic_polynomial, domination_counts, independence_counts, matching_counts,
    subgraph_component_polynomial, tutte_polynomial, tutte_polynomial_of_multigraph,
};
use alliance_poly::graph::families;
use alliance_poly::Graph;
use num_bigint::BigInt;
use proptest::prelude::*;

fn trimmed(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Include/exclude each edge in turn, skipping edges that touch a used vertex.
fn matching_oracle(g: &Graph) -> Vec<u64> {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, size: usize, out: &mut Vec<u64>) {
        let Some((&(u, v), rest)) = edges.split_first() else {
            out[size] += 1;
            return;
        };
        go(rest, used, size, out);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            go(rest, used, size + 1, out);
            used[u] = false;
            used[v] = false;
        }
    }
    let mut out = vec![0; g.order() + 1];
    go(&g.edges(), &mut vec![false; g.order()], 0, &mut out);
    trimmed(out)
}

/// `I(G) = I(G - v) + x I(G - N[v])` on a list of live vertices.
fn independence_oracle(g: &Graph) -> Vec<u64> {
    fn go(adj: &[Vec<usize>], alive: Vec<usize>, size: usize, out: &mut Vec<u64>) {
        let Some((&v, rest)) = alive.split_first() else {
            out[size] += 1;
            return;
        };
        go(adj, rest.to_vec(), size, out);
        let without: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|w| !adj[v].contains(w))
            .collect();
        go(adj, without, size + 1, out);
    }
    let adj = common::adjacency_lists(g);
    let mut out = vec![0; g.order() + 1];
    go(&adj, (0..g.order()).collect(), 0, &mut out);
    trimmed(out)
}

fn domination_oracle(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let adj = common::adjacency_lists(g);
    let mut out = vec![0; n + 1];
    for mask in 0u64..1 << n {
        let s = common::members(mask, n);
        let dominated = (0..n).all(|v| s.contains(&v) || adj[v].iter().any(|w| s.contains(w)));
        if dominated {
            out[s.len()] += 1;
        }
    }
    trimmed(out)
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

/// Whitney rank expansion of the Tutte polynomial at an integer point.
fn tutte_rank_oracle(g: &Graph, x: i128, y: i128) -> i128 {
    let n = g.order();
    let edges = g.edges();
    let full_rank = (n - components(n, &edges)) as u32;
    let mut total = 0;
    for mask in 0u64..1 << edges.len() {
        let subset: Vec<_> = common::members(mask, edges.len())
            .iter()
            .map(|&i| edges[i])
            .collect();
        let rank = (n - components(n, &subset)) as u32;
        total += (x - 1).pow(full_rank - rank) * (y - 1).pow(subset.len() as u32 - rank);
    }
    total
}

fn spanning_trees(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edges();
    (0u64..1 << edges.len())
        .filter(|m| m.count_ones() as usize == n - 1)
        .filter(|&m| {
            let subset: Vec<_> = common::members(m, edges.len())
                .iter()
                .map(|&i| edges[i])
                .collect();
            components(n, &subset) == 1
        })
        .count() as u64
}

/// Fraction-free elimination for `det(tI - A)`.
fn bareiss_charpoly_at(g: &Graph, t: i128) -> i128 {
    let n = g.order();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        t
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

#[test]
fn counting_polynomials_match_oracles() {
    let mut rng = common::rng(3);
    for i in 0..100 {
        let n = 1 + i % 8;
        let g = common::random_graph(&mut rng, n, 0.45);
        assert_eq!(matching_counts(&g).unwrap().counts(), matching_oracle(&g));
        assert_eq!(
            independence_counts(&g).unwrap().counts(),
            independence_oracle(&g)
        );
        assert_eq!(
            domination_counts(&g).unwrap().counts(),
            domination_oracle(&g)
        );
    }
}

#[test]
fn tutte_counts_spanning_trees() {
    let mut rng = common::rng(5);
    for i in 0..20 {
        let n = 2 + i % 6;
        let max_m = n * (n - 1) / 2;
        let m = (n - 1 + i % 5).min(max_m).min(12);
        let g = common::random_connected(&mut rng, n, m);
        let t = tutte_polynomial(&g).unwrap();
        assert_eq!(t.evaluate(1, 1), spanning_trees(&g) as i128);
        for (x, y) in [(2, 3), (0, 2), (-1, 4), (3, -2)] {
            assert_eq!(t.evaluate(x as i64, y as i64), tutte_rank_oracle(&g, x, y));
        }
    }
}

#[test]
fn characteristic_polynomial_matches_determinants() {
    let mut rng = common::rng(9);
    for i in 0..40 {
        let g = common::random_graph(&mut rng, 1 + i % 9, 0.5);
        let p = characteristic_polynomial(&g).unwrap();
        for t in -3..=4i128 {
            let got = p.evaluate(&BigInt::from(t));
            assert_eq!(got, BigInt::from(bareiss_charpoly_at(&g, t)), "t = {t}");
        }
    }
    for n in 3..=10 {
        let p = characteristic_polynomial(&families::cycle(n).unwrap()).unwrap();
        assert_eq!(p.evaluate(&BigInt::from(2)), BigInt::from(0));
    }
}

#[test]
fn subgraph_component_polynomial_totals() {
    let mut rng = common::rng(13);
    for i in 0..30 {
        let n = 1 + i % 10;
        let g = common::random_graph(&mut rng, n, 0.3);
        let q = subgraph_component_polynomial(&g).unwrap();
        assert_eq!(q.evaluate(1, 1), 1i128 << n);
        let connected: u64 = q
            .terms()
            .filter(|&((i, j), _)| i >= 1 && j == 1)
            .map(|(_, c)| c)
            .sum();
        let a = alliance_polynomial(&g).unwrap();
        assert_eq!(num_bigint::BigUint::from(connected), a.connected_count());
        assert_eq!(connected, common::connected_subsets_oracle(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tutte_ignores_edge_order(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected(&mut rng, 6, 9);
        let mut edges = g.edges();
        let base = tutte_polynomial_of_multigraph(6, &edges).unwrap();
        let perm = common::random_permutation(&mut rng, edges.len());
        edges = perm.iter().map(|&i| edges[i]).collect();
        prop_assert_eq!(tutte_polynomial_of_multigraph(6, &edges).unwrap(), base);
    }
}
