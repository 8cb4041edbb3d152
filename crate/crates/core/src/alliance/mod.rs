//! The alliance polynomial: exact alliance indices, exhaustive computation,
//! closed forms for graph families, composition rules and structural checks.

mod closed_form;
mod engine;
mod invariants;
mod polynomial;

pub use closed_form::{
    closed_form_complete, closed_form_complete_bipartite, closed_form_complete_minus_edge,
    closed_form_cycle, closed_form_empty, closed_form_path, closed_form_star, join_complete_empty,
    tilde_a, union_compose,
};
pub use engine::{
    alliance_polynomial, alliance_polynomial_with, size_counts, ComputeOptions, SizeCounts,
    BRUTE_FORCE_GUARD,
};
pub use invariants::{
    check_polynomial, invariant_report, InvariantCheck, InvariantReport, CHECK_NAMES,
};
pub use polynomial::AlliancePolynomial;

use crate::graph::{Bits, Graph, VertexSet};
use crate::{Error, Result};

fn nonempty_in(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.universe() != g.order() {
        return Err(Error::UniverseMismatch {
            set: set.universe(),
            graph: g.order(),
        });
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// Whether every `v` in `set` has `deg_S(v) >= deg_{V \ S}(v) + k`.
pub fn is_defensive_k_alliance(g: &Graph, set: &VertexSet, k: i64) -> Result<bool> {
    nonempty_in(g, set)?;
    let inside = set.bits();
    let outside = set.complement().bits();
    Ok(Bits(inside).all(|v| {
        let d_in = (g.neighbors(v) & inside).count_ones() as i64;
        let d_out = (g.neighbors(v) & outside).count_ones() as i64;
        d_in >= d_out + k
    }))
}

/// `k_S = min over v in S of deg_S(v) - deg_{V \ S}(v)`.
pub fn exact_alliance_index(g: &Graph, set: &VertexSet) -> Result<i64> {
    nonempty_in(g, set)?;
    Ok(mask_alliance_index(g, set.bits()))
}

/// `mask` must be nonempty and inside the vertex range.
#[inline]
pub(crate) fn mask_alliance_index(g: &Graph, mask: u64) -> i64 {
    Bits(mask)
        .map(|v| {
            let nb = g.neighbors(v);
            2 * (nb & mask).count_ones() as i64 - nb.count_ones() as i64
        })
        .min()
        .expect("nonempty mask")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn defensive_examples() {
        let k33 = families::complete_bipartite(3, 3).unwrap();
        let all = VertexSet::full(6).unwrap();
        assert!(is_defensive_k_alliance(&k33, &all, 3).unwrap());
        assert!(!is_defensive_k_alliance(&k33, &all, 4).unwrap());

        let s4 = families::star(4).unwrap();
        let all = VertexSet::full(4).unwrap();
        assert!(!is_defensive_k_alliance(&s4, &all, 2).unwrap());

        for g in [k33, s4, families::path(5).unwrap()] {
            for v in 0..g.order() {
                let single = VertexSet::from_vertices(&[v], g.order()).unwrap();
                let d = g.degree(v).unwrap() as i64;
                assert!(is_defensive_k_alliance(&g, &single, -d).unwrap());
                assert_eq!(exact_alliance_index(&g, &single).unwrap(), -d);
            }
        }
    }

    #[test]
    fn exact_index_examples() {
        let k33 = families::complete_bipartite(3, 3).unwrap();
        let one = VertexSet::from_vertices(&[4], 6).unwrap();
        assert_eq!(exact_alliance_index(&k33, &one).unwrap(), -3);
        let p4 = families::path(4).unwrap();
        assert_eq!(
            exact_alliance_index(&p4, &VertexSet::full(4).unwrap()).unwrap(),
            1
        );
        let c5 = families::cycle(5).unwrap();
        let pair = VertexSet::from_vertices(&[2, 3], 5).unwrap();
        assert_eq!(exact_alliance_index(&c5, &pair).unwrap(), 0);
    }

    #[test]
    fn empty_set_rejected() {
        let p4 = families::path(4).unwrap();
        let empty = VertexSet::from_bits(0, 4).unwrap();
        assert_eq!(exact_alliance_index(&p4, &empty), Err(Error::EmptySet));
        assert_eq!(
            is_defensive_k_alliance(&p4, &empty, 0),
            Err(Error::EmptySet)
        );
    }
}
