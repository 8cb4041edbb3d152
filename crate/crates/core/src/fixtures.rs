//! Graphs drawn in the figures of the distinguishing results, hard-coded as
//! edge lists. Each fixture records its expected degree sequence, checked on
//! construction.

use crate::graph::{families, ops, Graph};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub graph: Graph,
}

fn build(order: usize, edges: &[(usize, usize)], degrees: &[usize]) -> Graph {
    let g = Graph::new(order, edges).expect("fixture edge list is valid");
    assert_eq!(g.degree_sequence(), degrees, "fixture degree sequence");
    g
}

/// `P_8` (vertices 0..7) with pendants 8 and 9 on path vertices 3 and 4.
pub fn figure1_gamma1() -> Fixture {
    let mut edges: Vec<_> = (1..8).map(|i| (i - 1, i)).collect();
    edges.extend([(3, 8), (4, 9)]);
    Fixture {
        id: "G1",
        description: "path on 8 vertices with pendants at the 4th and 5th vertices",
        graph: build(10, &edges, &[3, 3, 2, 2, 2, 2, 1, 1, 1, 1]),
    }
}

/// `P_7` (vertices 0..6), pendant 7 on vertex 5, pendant path 4-8-9.
pub fn figure1_gamma2() -> Fixture {
    let mut edges: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
    edges.extend([(5, 7), (4, 8), (8, 9)]);
    Fixture {
        id: "G2",
        description: "path on 7 vertices, pendant at the 6th vertex, pendant P_2 at the 5th",
        graph: build(10, &edges, &[3, 3, 2, 2, 2, 2, 1, 1, 1, 1]),
    }
}

/// `u1..u6` as 0..5: 4-cycle u2 u5 u4 u6 with chord u5u6 and pendants u1, u3.
pub fn figure2_gamma3() -> Fixture {
    let edges = [(0, 1), (2, 3), (4, 5), (1, 4), (4, 3), (3, 5), (5, 1)];
    Fixture {
        id: "G3",
        description: "4-cycle with one chord and a pendant on each chord-free vertex",
        graph: build(6, &edges, &[3, 3, 3, 3, 1, 1]),
    }
}

/// Centre `c = 0` joined to `a, b, d, e, f = 1..5`, plus edges `ab`, `de`.
pub fn figure2_gamma4() -> Fixture {
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (3, 4)];
    Fixture {
        id: "G4",
        description: "two triangles sharing a vertex, plus a pendant on that vertex",
        graph: build(6, &edges, &[5, 2, 2, 2, 2, 1]),
    }
}

/// Path `v1..v6` as 0..5 plus chords `v6v3`, `v3v1`.
pub fn figure3_gamma5() -> Fixture {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (2, 0)];
    Fixture {
        id: "G5",
        description: "path v1..v6 with chords v6v3 and v3v1",
        graph: build(6, &edges, &[4, 2, 2, 2, 2, 2]),
    }
}

/// Path `v1..v6` as 0..5 plus chords `v2v6`, `v6v3`.
pub fn figure3_gamma6() -> Fixture {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 2)];
    Fixture {
        id: "G6",
        description: "path v1..v6 with chords v2v6 and v6v3",
        graph: build(6, &edges, &[3, 3, 3, 2, 2, 1]),
    }
}

fn named(id: &'static str, description: &'static str, graph: Graph) -> Fixture {
    Fixture {
        id,
        description,
        graph,
    }
}

pub fn p4() -> Fixture {
    named("P4", "path on 4 vertices", families::path(4).unwrap())
}

pub fn k13() -> Fixture {
    named("K1,3", "star on 4 vertices", families::star(4).unwrap())
}

pub fn p5() -> Fixture {
    named("P5", "path on 5 vertices", families::path(5).unwrap())
}

pub fn p2_union_c3() -> Fixture {
    let g = ops::disjoint_union(&families::path(2).unwrap(), &families::cycle(3).unwrap()).unwrap();
    named("P2uC3", "disjoint union of P_2 and C_3", g)
}

pub fn k33() -> Fixture {
    named(
        "K3,3",
        "complete bipartite graph K_{3,3}",
        families::complete_bipartite(3, 3).unwrap(),
    )
}

pub fn p2_box_c3() -> Fixture {
    let g =
        ops::cartesian_product(&families::path(2).unwrap(), &families::cycle(3).unwrap()).unwrap();
    named(
        "P2[]C3",
        "Cartesian product of P_2 and C_3 (triangular prism)",
        g,
    )
}

pub fn p2_strong_p3() -> Fixture {
    let g = ops::strong_product(&families::path(2).unwrap(), &families::path(3).unwrap()).unwrap();
    named("P2xP3", "strong product of P_2 and P_3", g)
}

pub fn e2_join_p4() -> Fixture {
    let g = ops::join(&families::empty(2).unwrap(), &families::path(4).unwrap()).unwrap();
    named("E2+P4", "join of E_2 and P_4", g)
}
