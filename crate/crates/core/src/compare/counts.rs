use std::fmt;

use super::check_order;
use crate::graph::{Bits, Graph};
use crate::Result;

/// Counts indexed by set size, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountVector(Vec<u64>);

impl CountVector {
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        CountVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// `m_k`: matchings with `k` edges.
pub fn matching_counts(g: &Graph) -> Result<CountVector> {
    check_order("matching polynomial", g)?;
    fn walk(g: &Graph, free: u64, size: usize, counts: &mut [u64]) {
        if free == 0 {
            counts[size] += 1;
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        walk(g, rest, size, counts);
        for u in Bits(g.neighbors(v) & rest) {
            walk(g, rest & !(1 << u), size + 1, counts);
        }
    }
    let mut counts = vec![0u64; g.order() / 2 + 1];
    walk(g, g.vertex_mask(), 0, &mut counts);
    Ok(CountVector::new(counts))
}

/// `s_k`: independent sets of size `k`, the empty set included.
pub fn independence_counts(g: &Graph) -> Result<CountVector> {
    check_order("independence polynomial", g)?;
    let mut counts = vec![0u64; g.order() + 1];
    for mask in 0..=g.vertex_mask() {
        if Bits(mask).all(|v| g.neighbors(v) & mask == 0) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(CountVector::new(counts))
}

/// `d_k`: dominating sets of size `k`.
pub fn domination_counts(g: &Graph) -> Result<CountVector> {
    check_order("domination polynomial", g)?;
    let full = g.vertex_mask();
    let mut counts = vec![0u64; g.order() + 1];
    for mask in 0..=full {
        let covered = Bits(mask).fold(mask, |acc, v| acc | g.neighbors(v));
        if covered == full {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(CountVector::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, ops};

    fn c(v: &[u64]) -> CountVector {
        CountVector::new(v.to_vec())
    }

    #[test]
    fn matchings() {
        let p5 = families::path(5).unwrap();
        assert_eq!(matching_counts(&p5).unwrap(), c(&[1, 4, 3]));
        let u =
            ops::disjoint_union(&families::path(2).unwrap(), &families::cycle(3).unwrap()).unwrap();
        assert_eq!(matching_counts(&u).unwrap(), c(&[1, 4, 3]));
        assert_eq!(
            matching_counts(&families::empty(4).unwrap()).unwrap(),
            c(&[1])
        );
    }

    #[test]
    fn independent_sets() {
        assert_eq!(
            independence_counts(&families::cycle(4).unwrap()).unwrap(),
            c(&[1, 4, 2])
        );
        assert_eq!(
            independence_counts(&families::complete(5).unwrap()).unwrap(),
            c(&[1, 5])
        );
    }

    #[test]
    fn dominating_sets() {
        assert_eq!(
            domination_counts(&families::complete(3).unwrap()).unwrap(),
            c(&[0, 3, 3, 1])
        );
        assert_eq!(
            domination_counts(&families::empty(2).unwrap()).unwrap(),
            c(&[0, 0, 1])
        );
    }

    #[test]
    fn guard() {
        assert!(independence_counts(&families::empty(17).unwrap()).is_err());
    }
}
