//! Brute-force versions of six classical graph polynomials, used to show
//! pairs of graphs they fail to separate while the alliance polynomial does.

mod charpoly;
mod counts;
mod suite;
mod tutte;

use std::fmt;
use std::str::FromStr;

pub use charpoly::characteristic_polynomial;
pub use counts::{domination_counts, independence_counts, matching_counts, CountVector};
pub use suite::{distinguishing_suite, ClassicalSide, SuiteItem, SuiteReport};
pub use tutte::{
    subgraph_component_polynomial, tutte_polynomial, tutte_polynomial_of_multigraph, BivariatePoly,
    TUTTE_EDGE_GUARD,
};

use crate::alliance::{alliance_polynomial_with, AlliancePolynomial, ComputeOptions};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Largest order accepted by the vertex-subset oracles.
pub const COMPARE_GUARD: usize = 16;

pub(crate) fn check_order(what: &'static str, g: &Graph) -> Result<()> {
    if g.order() > COMPARE_GUARD {
        return Err(Error::GuardExceeded {
            what,
            order: g.order(),
            limit: COMPARE_GUARD,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyKind {
    Alliance,
    Matching,
    Independence,
    Domination,
    Characteristic,
    Tutte,
    SubgraphComponent,
}

impl PolyKind {
    pub const ALL: [PolyKind; 7] = [
        PolyKind::Alliance,
        PolyKind::Matching,
        PolyKind::Independence,
        PolyKind::Domination,
        PolyKind::Characteristic,
        PolyKind::Tutte,
        PolyKind::SubgraphComponent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::Alliance => "alliance",
            PolyKind::Matching => "matching",
            PolyKind::Independence => "independence",
            PolyKind::Domination => "domination",
            PolyKind::Characteristic => "characteristic",
            PolyKind::Tutte => "tutte",
            PolyKind::SubgraphComponent => "subgraph-component",
        }
    }

    pub fn compute(self, g: &Graph) -> Result<PolyValue> {
        Ok(match self {
            PolyKind::Alliance => {
                PolyValue::Alliance(alliance_polynomial_with(g, &ComputeOptions::default())?)
            }
            PolyKind::Matching => PolyValue::Counts(matching_counts(g)?),
            PolyKind::Independence => PolyValue::Counts(independence_counts(g)?),
            PolyKind::Domination => PolyValue::Counts(domination_counts(g)?),
            PolyKind::Characteristic => PolyValue::Integer(characteristic_polynomial(g)?),
            PolyKind::Tutte => PolyValue::Bivariate(tutte_polynomial(g)?),
            PolyKind::SubgraphComponent => PolyValue::Bivariate(subgraph_component_polynomial(g)?),
        })
    }
}

impl FromStr for PolyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown polynomial {s:?}"))
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Any of the compared polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyValue {
    Alliance(AlliancePolynomial),
    Counts(CountVector),
    Integer(IntPolynomial),
    Bivariate(BivariatePoly),
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::Alliance(p) => write!(f, "{p}"),
            PolyValue::Counts(c) => write!(f, "{c}"),
            PolyValue::Integer(p) => f.write_str(&p.render("x")),
            PolyValue::Bivariate(p) => write!(f, "{p}"),
        }
    }
}
