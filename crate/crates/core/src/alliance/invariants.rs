//! Structural checks of an alliance polynomial against its graph.
//!
//! Every check is evaluated against a *claimed* polynomial, so a polynomial
//! that does not belong to the graph fails with a witness. Composition checks
//! pair the graph with the fixed partners `E_1` and `P_2`.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::engine::{check_guard, size_counts_with};
use super::{
    alliance_polynomial_with, is_defensive_k_alliance, mask_alliance_index, union_compose,
    AlliancePolynomial, ComputeOptions,
};
use crate::graph::{families, ops, Bits, Graph, VertexSet};
use crate::{Error, Result};

/// Names of the checks, in report order.
pub const CHECK_NAMES: [&str; 13] = [
    "min-exponent-and-top-degree-count",
    "second-coefficient-count",
    "min-degree-term-and-degree-bounds",
    "regular-components",
    "parity-symmetry",
    "evaluation-at-one",
    "cumulative-alliance-counts",
    "exact-index-equivalence",
    "disjoint-union-composition",
    "join-evaluation-at-one",
    "join-degree",
    "proper-subgraph-separation",
    "partition-determinism",
];

/// Subsets checked exhaustively for the exact-index equivalence up to this
/// order; above it a fixed-seed sample of 1000 subsets is used.
const EXHAUSTIVE_SUBSETS_UP_TO: usize = 10;
const SAMPLED_SUBSETS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub checks: Vec<InvariantCheck>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InvariantCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json_value(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.passed, "witness": c.witness}))
            .collect();
        json!({"checks": checks, "all_pass": self.all_passed()})
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict} {}: {}", c.name, c.witness)?;
        }
        Ok(())
    }
}

/// Computes the polynomial of `g` and checks it.
pub fn invariant_report(g: &Graph, opts: &ComputeOptions) -> Result<InvariantReport> {
    let p = alliance_polynomial_with(g, opts)?;
    check_polynomial(g, &p, opts)
}

/// Checks a claimed polynomial against `g`. Fails only on guard or shape
/// errors; mismatches become failed checks.
pub fn check_polynomial(
    g: &Graph,
    claimed: &AlliancePolynomial,
    opts: &ComputeOptions,
) -> Result<InvariantReport> {
    check_guard("invariant report", g.order(), opts.force)?;
    if claimed.order() != g.order() {
        return Err(Error::Polynomial(format!(
            "claimed polynomial has order {}, graph has order {}",
            claimed.order(),
            g.order()
        )));
    }
    let ctx = Ctx {
        g,
        p: claimed,
        opts: ComputeOptions {
            threads: opts.threads,
            force: true,
        },
        n: g.order() as i64,
        top: g.max_degree() as i64,
        bottom: g.min_degree() as i64,
    };
    let checks = vec![
        ctx.min_exponent(),
        ctx.second_coefficient(),
        ctx.degree_bounds(),
        ctx.regular_components(),
        ctx.parity(),
        ctx.evaluation_at_one()?,
        ctx.cumulative_counts()?,
        ctx.exact_index()?,
        ctx.union_composition()?,
        ctx.join_at_one()?,
        ctx.join_degree()?,
        ctx.proper_subgraphs()?,
        ctx.determinism()?,
    ];
    debug_assert!(checks.iter().map(|c| c.name).eq(CHECK_NAMES));
    Ok(InvariantReport { checks })
}

struct Ctx<'a> {
    g: &'a Graph,
    p: &'a AlliancePolynomial,
    opts: ComputeOptions,
    n: i64,
    top: i64,
    bottom: i64,
}

fn check(name: &'static str, passed: bool, witness: String) -> InvariantCheck {
    InvariantCheck {
        name,
        passed,
        witness,
    }
}

fn deg_or_none(e: Option<usize>) -> String {
    e.map_or_else(|| "none".into(), |e| e.to_string())
}

impl Ctx<'_> {
    fn count_degree(&self, d: i64) -> usize {
        (0..self.g.order())
            .filter(|&v| self.g.neighbors(v).count_ones() as i64 == d)
            .count()
    }

    fn poly(&self, g: &Graph) -> Result<AlliancePolynomial> {
        alliance_polynomial_with(g, &self.opts)
    }

    fn min_exponent(&self) -> InvariantCheck {
        let expected = (self.n - self.top) as usize;
        let got = self.p.min_exponent();
        let lead = self.p.coefficient(-self.top);
        let vertices = self.count_degree(self.top);
        check(
            CHECK_NAMES[0],
            got == Some(expected) && lead == BigUint::from(vertices),
            format!(
                "Deg_min = {} (n - delta_1 = {} - {} = {expected}); A_{} = {lead}, vertices of degree {} = {vertices}",
                deg_or_none(got),
                self.n,
                self.top,
                -self.top,
                self.top
            ),
        )
    }

    fn second_coefficient(&self) -> InvariantCheck {
        if self.top == 0 {
            return check(CHECK_NAMES[1], true, "delta_1 = 0, not applicable".into());
        }
        let k = -self.top + 1;
        let got = self.p.coefficient(k);
        let vertices = self.count_degree(self.top - 1);
        check(
            CHECK_NAMES[1],
            got == BigUint::from(vertices),
            format!(
                "A_{k} = {got}, vertices of degree {} = {vertices}",
                self.top - 1
            ),
        )
    }

    fn degree_bounds(&self) -> InvariantCheck {
        let at_bottom = self.p.coefficient(self.bottom);
        let deg = self.p.max_exponent().map(|e| e as i64);
        let lo = self.n + self.bottom;
        let hi = self.n + self.top;
        let in_bounds = deg.is_some_and(|d| lo <= d && d <= hi);
        check(
            CHECK_NAMES[2],
            at_bottom > BigUint::default() && in_bounds,
            format!(
                "A_{} = {at_bottom}; {lo} <= Deg = {} <= {hi}",
                self.bottom,
                deg_or_none(self.p.max_exponent())
            ),
        )
    }

    fn regular_components(&self) -> InvariantCheck {
        let components = self.g.components();
        let regular = components
            .iter()
            .filter(|&&c| Bits(c).all(|v| self.g.neighbors(v).count_ones() as i64 == self.top))
            .count();
        let got = self.p.coefficient(self.top);
        let mut passed = got == BigUint::from(regular);
        let mut witness = format!(
            "A_{} = {got}, {}-regular components = {regular}",
            self.top, self.top
        );
        if components.len() == 1 {
            let is_regular = self.top == self.bottom;
            passed &= (got == BigUint::one()) == is_regular;
            witness.push_str(&format!("; connected, regular = {is_regular}"));
        }
        check(CHECK_NAMES[3], passed, witness)
    }

    fn parity(&self) -> InvariantCheck {
        let seq = self.g.degree_sequence();
        let uniform = seq.iter().all(|d| d % 2 == 0) || seq.iter().all(|d| d % 2 == 1);
        let symmetric = self.p.is_parity_symmetric();
        check(
            CHECK_NAMES[4],
            uniform == symmetric,
            format!(
                "degree parities uniform = {uniform}, polynomial parity-symmetric = {symmetric}"
            ),
        )
    }

    fn evaluation_at_one(&self) -> Result<InvariantCheck> {
        let counts = size_counts_with(self.g, true)?;
        let at_one = self.p.evaluate(&BigRational::one());
        let connected = self.p.connected_count();
        let bound = BigUint::one() << self.g.order();
        let passed = at_one == BigRational::from_integer(connected.clone().into())
            && connected < bound
            && connected == BigUint::from(counts.connected_total())
            && self.p.cut_set_count() == counts.cut_total().into();
        Ok(check(
            CHECK_NAMES[5],
            passed,
            format!(
                "A(G;1) = {connected}, connected induced subgraphs = {}, cut sets = {} (2^n - 1 - A(G;1) = {})",
                counts.connected_total(),
                counts.cut_total(),
                self.p.cut_set_count()
            ),
        ))
    }

    /// Direct counts of connected defensive k-alliances for
    /// `k = -delta_1 ..= delta_1 + 1`, testing the defining inequality.
    fn cumulative_counts(&self) -> Result<InvariantCheck> {
        let g = self.g;
        let n = g.order();
        let ks: Vec<i64> = (-self.top..=self.top + 1).collect();
        let mut direct = vec![0u64; ks.len()];
        for mask in 1..(1u64 << n) {
            if !g.mask_is_connected(mask) {
                continue;
            }
            let set = VertexSet::from_bits(mask, n)?;
            for (i, &k) in ks.iter().enumerate() {
                if is_defensive_k_alliance(g, &set, k)? {
                    direct[i] += 1;
                } else {
                    break;
                }
            }
        }
        let mismatch = ks
            .iter()
            .zip(&direct)
            .find(|&(&k, &d)| self.p.defensive_alliance_count(k) != BigUint::from(d));
        let witness = match mismatch {
            None => format!(
                "sum_(i>=k) A_i matches enumeration for k in [{}, {}]",
                -self.top,
                self.top + 1
            ),
            Some((&k, &d)) => format!(
                "k = {k}: polynomial gives {}, enumeration gives {d}",
                self.p.defensive_alliance_count(k)
            ),
        };
        Ok(check(CHECK_NAMES[6], mismatch.is_none(), witness))
    }

    fn exact_index(&self) -> Result<InvariantCheck> {
        let g = self.g;
        let n = g.order();
        let full = g.vertex_mask();
        let masks: Vec<u64> = if n <= EXHAUSTIVE_SUBSETS_UP_TO {
            (1..=full).collect()
        } else {
            let seed = g.adjacency().iter().fold(n as u64, |h, &a| {
                h.rotate_left(7) ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            });
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..SAMPLED_SUBSETS)
                .map(|_| rng.gen_range(1..=full))
                .collect()
        };
        for &mask in &masks {
            let set = VertexSet::from_bits(mask, n)?;
            let k = mask_alliance_index(g, mask);
            let holds = is_defensive_k_alliance(g, &set, k)?;
            let next = is_defensive_k_alliance(g, &set, k + 1)?;
            let tight = Bits(mask).any(|v| {
                let d_in = (g.neighbors(v) & mask).count_ones() as i64;
                let d_out = (g.neighbors(v) & !mask & full).count_ones() as i64;
                d_in == d_out + k
            });
            if !holds || next || !tight {
                return Ok(check(
                    CHECK_NAMES[7],
                    false,
                    format!("S = {mask:#b}: k_S = {k}, k-alliance = {holds}, (k+1)-alliance = {next}, attained = {tight}"),
                ));
            }
        }
        Ok(check(
            CHECK_NAMES[7],
            true,
            format!(
                "{} subsets: k_S-alliance, not (k_S+1)-alliance, bound attained",
                masks.len()
            ),
        ))
    }

    fn partners() -> Result<[Graph; 2]> {
        Ok([families::empty(1)?, families::path(2)?])
    }

    fn union_composition(&self) -> Result<InvariantCheck> {
        for h in Self::partners()? {
            let direct = self.poly(&ops::disjoint_union(self.g, &h)?)?;
            let composed = union_compose(&[self.p.clone(), self.poly(&h)?])?;
            if direct != composed {
                return Ok(check(
                    CHECK_NAMES[8],
                    false,
                    format!(
                        "G with partner of order {}: direct {direct}, composed {composed}",
                        h.order()
                    ),
                ));
            }
        }
        Ok(check(
            CHECK_NAMES[8],
            true,
            "A(G u H) = x^(n_H) A(G) + x^n A(H) for H in {E_1, P_2}".into(),
        ))
    }

    fn join_at_one(&self) -> Result<InvariantCheck> {
        let n = self.g.order();
        let mut witness = Vec::new();
        let mut passed = true;
        for h in Self::partners()? {
            let joined = self.poly(&ops::join(self.g, &h)?)?.connected_count();
            let own = self.p.connected_count();
            let other = self.poly(&h)?.connected_count();
            let expected = ((BigUint::one() << n) - 1u32) * ((BigUint::one() << h.order()) - 1u32);
            let ok = joined >= &own + &other && joined.clone() - &own - &other == expected;
            passed &= ok;
            witness.push(format!(
                "H order {}: {joined} - {own} - {other} vs {expected}",
                h.order()
            ));
        }
        Ok(check(CHECK_NAMES[9], passed, witness.join("; ")))
    }

    /// Compares the top exponent of the join with that of the disjoint union.
    /// `Deg Ã(G,H) = Deg A(G u H)` with `Ã = A(G join H) - A(G) - A(H)`.
    fn join_degree(&self) -> Result<InvariantCheck> {
        let mut witness = Vec::new();
        let mut passed = true;
        let own = self.p.to_int_polynomial();
        for h in Self::partners()? {
            let joined = self.poly(&ops::join(self.g, &h)?)?.to_int_polynomial();
            let tilde = joined - own.clone() - self.poly(&h)?.to_int_polynomial();
            let union = self.poly(&ops::disjoint_union(self.g, &h)?)?.max_exponent();
            passed &= tilde.degree() == union;
            witness.push(format!(
                "H order {}: Deg Ã(G,H) = {}, Deg A(G u H) = {}",
                h.order(),
                deg_or_none(tilde.degree()),
                deg_or_none(union)
            ));
        }
        Ok(check(CHECK_NAMES[10], passed, witness.join("; ")))
    }

    fn proper_subgraphs(&self) -> Result<InvariantCheck> {
        let g = self.g;
        let own_at_one = self.p.connected_count();
        for (u, v) in g.edges() {
            let q = self.poly(&ops::remove_edge(g, u, v)?)?;
            if &q == self.p || q.connected_count() >= own_at_one {
                return Ok(check(
                    CHECK_NAMES[11],
                    false,
                    format!(
                        "G - {u}{v}: A = {q}, A(1) = {} vs {own_at_one}",
                        q.connected_count()
                    ),
                ));
            }
        }
        if g.order() >= 2 {
            for v in 0..g.order() {
                let q = self.poly(&ops::remove_vertex(g, v)?)?;
                if &q == self.p {
                    return Ok(check(
                        CHECK_NAMES[11],
                        false,
                        format!("G - v{v} has the same polynomial"),
                    ));
                }
            }
        }
        Ok(check(
            CHECK_NAMES[11],
            true,
            format!(
                "{} edge deletions and {} vertex deletions all differ; edge deletions lower A(1)",
                g.size(),
                if g.order() >= 2 { g.order() } else { 0 }
            ),
        ))
    }

    fn determinism(&self) -> Result<InvariantCheck> {
        let mut seen = Vec::new();
        let mut passed = true;
        for parts in [1, 2, 8] {
            let q = alliance_polynomial_with(
                self.g,
                &ComputeOptions {
                    threads: parts,
                    force: true,
                },
            )?;
            passed &= &q == self.p;
            seen.push(format!(
                "{parts}: {}",
                q.connected_count().to_u64().unwrap_or(u64::MAX)
            ));
        }
        Ok(check(
            CHECK_NAMES[12],
            passed,
            format!("identical across partitions [{}]", seen.join(", ")),
        ))
    }
}
