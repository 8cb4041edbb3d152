//! Exhaustive catalog of small graphs up to isomorphism, with their alliance
//! polynomials, collision grouping and the family uniqueness checks.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::alliance::{
    alliance_polynomial_with, closed_form_empty, AlliancePolynomial, ComputeOptions,
};
use crate::graph::canon::{canonical_form_with, enumerate_nonisomorphic_with, CANON_GUARD};
use crate::graph::io::{from_graph6, to_graph6};
use crate::graph::{families, CanonicalForm, Graph};
use crate::{Error, Result};

/// Largest catalog order built without an override.
pub const CENSUS_GUARD: usize = 7;
/// Hard ceiling even with the override; order 8 enumerates 2^28 labelled
/// graphs and takes hours on one core.
pub const CENSUS_MAX_ORDER: usize = CANON_GUARD;

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads, 0 meaning the rayon default.
    pub threads: usize,
    pub force: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub canonical: CanonicalForm,
    /// The graph in its canonical labelling.
    pub graph: Graph,
    pub polynomial: AlliancePolynomial,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
}

impl CatalogEntry {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let canonical = canonical_form_with(g, true)?;
        let graph = canonical.to_graph();
        let polynomial = alliance_polynomial_with(&graph, &ComputeOptions::default())?;
        Ok(CatalogEntry {
            canonical,
            degree_sequence: graph.degree_sequence(),
            connected: graph.is_connected(),
            graph,
            polynomial,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.graph).expect("catalog orders fit graph6")
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "g6": self.graph6(),
            "n": self.order(),
            "poly": Value::Object(self.polynomial.coeff_map_json()),
            "degseq": self.degree_sequence,
            "connected": self.connected,
        })
    }

    fn from_json_line(line: &str, lineno: usize) -> Result<Self> {
        let bad = |message: String| Error::Catalog {
            line: lineno,
            message,
        };
        let v: Value = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        let g6 = v["g6"]
            .as_str()
            .ok_or_else(|| bad("missing \"g6\"".into()))?;
        let n = v["n"].as_u64().ok_or_else(|| bad("missing \"n\"".into()))? as usize;
        let poly = v["poly"]
            .as_object()
            .ok_or_else(|| bad("missing \"poly\"".into()))?;
        let degseq: Vec<usize> = v["degseq"]
            .as_array()
            .ok_or_else(|| bad("missing \"degseq\"".into()))?
            .iter()
            .map(|d| d.as_u64().map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| bad("non-integer degree".into()))?;
        let connected = v["connected"]
            .as_bool()
            .ok_or_else(|| bad("missing \"connected\"".into()))?;

        let graph = from_graph6(g6).map_err(|e| bad(e.to_string()))?;
        if graph.order() != n {
            return Err(bad(format!("g6 has order {}, n is {n}", graph.order())));
        }
        let canonical = canonical_form_with(&graph, true).map_err(|e| bad(e.to_string()))?;
        if canonical.to_graph() != graph {
            return Err(bad("graph is not in canonical labelling".into()));
        }
        if degseq != graph.degree_sequence() || connected != graph.is_connected() {
            return Err(bad("summary fields disagree with the graph".into()));
        }
        let polynomial =
            AlliancePolynomial::from_coeff_map_json(n, poly).map_err(|e| bad(e.to_string()))?;
        Ok(CatalogEntry {
            canonical,
            graph,
            polynomial,
            degree_sequence: degseq,
            connected,
        })
    }
}

fn check_census_order(max_n: usize, force: bool) -> Result<()> {
    let limit = if force {
        CENSUS_MAX_ORDER
    } else {
        CENSUS_GUARD
    };
    if max_n > limit {
        return Err(Error::GuardExceeded {
            what: "census",
            order: max_n,
            limit,
        });
    }
    Ok(())
}

fn build_orders(max_n: usize, force: bool) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let graphs = enumerate_nonisomorphic_with(n, force)?;
        let entries: Vec<CatalogEntry> = graphs
            .par_iter()
            .map(CatalogEntry::from_graph)
            .collect::<Result<_>>()?;
        out.extend(entries);
    }
    Ok(out)
}

/// One entry per isomorphism class for each order `1..=max_n`, ordered by
/// order and then canonical form.
pub fn build_catalog(max_n: usize, opts: &CensusOptions) -> Result<Vec<CatalogEntry>> {
    check_census_order(max_n, opts.force)?;
    if opts.threads == 0 {
        return build_orders(max_n, opts.force);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    pool.install(|| build_orders(max_n, opts.force))
}

/// Number of catalog entries per order, index 0 unused.
pub fn class_counts(catalog: &[CatalogEntry]) -> Vec<usize> {
    let max = catalog.iter().map(CatalogEntry::order).max().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for e in catalog {
        counts[e.order()] += 1;
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionGroup {
    pub polynomial: AlliancePolynomial,
    pub members: Vec<CanonicalForm>,
}

/// Groups of at least two non-isomorphic entries with the same polynomial.
/// Equality includes the order, so equal coefficient maps at different
/// orders do not collide.
pub fn find_collisions(catalog: &[CatalogEntry]) -> Vec<CollisionGroup> {
    let mut groups: BTreeMap<String, CollisionGroup> = BTreeMap::new();
    for e in catalog {
        groups
            .entry(e.polynomial.to_json_string())
            .or_insert_with(|| CollisionGroup {
                polynomial: e.polynomial.clone(),
                members: Vec::new(),
            })
            .members
            .push(e.canonical.clone());
    }
    groups
        .into_values()
        .filter_map(|mut g| {
            g.members.sort();
            g.members.dedup();
            (g.members.len() >= 2).then_some(g)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characterization {
    /// Family member, e.g. `C_6`.
    pub name: String,
    pub order: usize,
    /// Entries with the same polynomial that are not this graph, as graph6.
    pub rivals: Vec<String>,
    pub present: bool,
    /// Extra closed-form condition, only used for edgeless graphs.
    pub closed_form_ok: bool,
}

impl Characterization {
    pub fn passed(&self) -> bool {
        self.present && self.rivals.is_empty() && self.closed_form_ok
    }
}

#[derive(Clone, Debug)]
pub struct CharacterizationReport {
    pub verdicts: Vec<Characterization>,
}

impl CharacterizationReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(Characterization::passed)
    }

    pub fn to_json_value(&self) -> Value {
        let items: Vec<Value> = self
            .verdicts
            .iter()
            .map(|c| {
                json!({
                    "graph": c.name,
                    "n": c.order,
                    "passed": c.passed(),
                    "rivals": c.rivals,
                })
            })
            .collect();
        json!({ "verdicts": items, "all_passed": self.all_passed() })
    }
}

impl fmt::Display for CharacterizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.verdicts {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} {}", c.name)?;
            if !c.present {
                write!(f, ": missing from catalog")?;
            } else if !c.rivals.is_empty() {
                write!(f, ": shared with {}", c.rivals.join(", "))?;
            } else if !c.closed_form_ok {
                write!(f, ": polynomial differs from n x^n")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Builder = fn(usize) -> Result<Graph>;

const FAMILIES: [(&str, usize, Builder); 6] = [
    ("P", 2, families::path),
    ("C", 3, families::cycle),
    ("K", 1, families::complete),
    ("S", 2, families::star),
    ("K/e", 2, families::complete_minus_edge),
    ("E", 1, families::empty),
];

/// For each family member up to the largest catalog order, checks that no
/// other catalog entry of any order shares its polynomial.
pub fn verify_characterizations(catalog: &[CatalogEntry]) -> Result<CharacterizationReport> {
    let max_n = catalog.iter().map(CatalogEntry::order).max().unwrap_or(0);
    let mut by_poly: BTreeMap<String, Vec<&CatalogEntry>> = BTreeMap::new();
    for e in catalog {
        by_poly
            .entry(e.polynomial.to_json_string())
            .or_default()
            .push(e);
    }
    let by_form: BTreeMap<&CanonicalForm, &CatalogEntry> =
        catalog.iter().map(|e| (&e.canonical, e)).collect();

    let mut verdicts = Vec::new();
    for (family, lo, build) in FAMILIES {
        for t in lo..=max_n {
            let g = build(t)?;
            let form = canonical_form_with(&g, true)?;
            let name = match family {
                "K/e" => format!("K_{t}/e"),
                _ => format!("{family}_{t}"),
            };
            let Some(entry) = by_form.get(&form) else {
                verdicts.push(Characterization {
                    name,
                    order: t,
                    rivals: Vec::new(),
                    present: false,
                    closed_form_ok: true,
                });
                continue;
            };
            let rivals = by_poly[&entry.polynomial.to_json_string()]
                .iter()
                .filter(|e| e.canonical != form)
                .map(|e| e.graph6())
                .collect();
            let closed_form_ok = family != "E" || entry.polynomial == closed_form_empty(t)?;
            verdicts.push(Characterization {
                name,
                order: t,
                rivals,
                present: true,
                closed_form_ok,
            });
        }
    }
    Ok(CharacterizationReport { verdicts })
}

pub fn save_catalog<W: Write>(entries: &[CatalogEntry], mut sink: W) -> Result<()> {
    for e in entries {
        writeln!(sink, "{}", e.to_json_value())?;
    }
    sink.flush()?;
    Ok(())
}

/// Blank lines are skipped; line numbers in errors count from 1.
pub fn load_catalog<R: BufRead>(source: R) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(CatalogEntry::from_json_line(&line, i + 1)?);
    }
    Ok(out)
}

pub fn collisions_to_json(groups: &[CollisionGroup]) -> Value {
    let items: Vec<Value> = groups
        .iter()
        .map(|g| {
            let members: Vec<Value> = g
                .members
                .iter()
                .map(|c| Value::String(to_graph6(&c.to_graph()).expect("small order")))
                .collect();
            let mut obj = Map::new();
            obj.insert("poly".into(), g.polynomial.to_json_value());
            obj.insert("members".into(), Value::Array(members));
            Value::Object(obj)
        })
        .collect();
    Value::Array(items)
}
