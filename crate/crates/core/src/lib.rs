//! Exact alliance polynomials of finite simple graphs.
//!
//! A nonempty vertex set `S` is a *defensive k-alliance* when every member has
//! at least `k` more neighbours inside `S` than outside it. The largest such
//! `k` is the exact index `k_S`, and the alliance polynomial of a graph of
//! order `n` is
//!
//! ```text
//! A(G; x) = sum over S inducing a nonempty connected subgraph of x^(n + k_S)
//! ```
//!
//! The crate computes it by exhaustive subset enumeration, provides closed
//! forms for the standard graph families and composition rules for unions and
//! joins, checks the structural properties of the polynomial against a graph,
//! compares it with six classical graph polynomials, and runs an exhaustive
//! census of small graphs.
//!
//! ```
//! use alliance_poly::graph::families;
//! use alliance_poly::alliance::alliance_polynomial;
//!
//! let k33 = families::complete_bipartite(3, 3).unwrap();
//! let p = alliance_polynomial(&k33).unwrap();
//! assert_eq!(p.to_string(), "6x^3 + 33x^5 + 15x^7 + x^9");
//! ```

pub mod alliance;
pub mod census;
pub mod compare;
mod error;
pub mod fixtures;
pub mod graph;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
