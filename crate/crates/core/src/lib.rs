//! Degree-based graph entropy.
//!
//! The entropy of a graph `G` with degrees `d_1, ..., d_n` and `m >= 1` edges is the
//! Shannon entropy (base 2) of the distribution `d_i / 2m`. This crate computes it,
//! builds the graphs that minimize it among `(n, m)`-graphs and `(n, m)`-bipartite
//! graphs, recognizes threshold and difference graphs, and checks the closed-form
//! minima against exhaustive enumeration on small vertex counts.
//!
//! Entropy comparisons at a fixed edge count are exact: `sum d log d` is the base-2
//! logarithm of the integer `prod d^d`, so two graphs with the same `m` are ordered by
//! comparing those integers.

pub mod entropy;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod recognition;
pub mod sequences;
pub mod verify;

pub use entropy::{compare_same_m, compute_entropy, exact_key, EntropyReport};
pub use error::{Error, Result};
pub use graph::{CanonicalKey, Family, Graph};
pub use sequences::{BipartitePair, DegreeSequence, Majorization};

/// Rounds to nine decimal places for display and JSON output.
pub fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

pub(crate) fn serialize_round9<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round9(*x))
}
