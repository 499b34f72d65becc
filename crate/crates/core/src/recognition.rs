//! Threshold and difference graph recognition.
//!
//! Each class has two independent deciders: a structural one used for the verdict and a
//! second characterization exposed for cross-checking.

use serde::Serialize;

use crate::graph::{bipartition, Graph};
use crate::sequences::{conjugate, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdVerdict {
    pub is_threshold: bool,
    /// `(u, v, w, x)` with `uv, wx` edges and `uw, vx` non-edges.
    pub witness: Option<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceVerdict {
    pub is_difference: bool,
    pub is_bipartite: bool,
    /// `(x1, y1, x2, y2)` with `x1y1, x2y2` edges and `x1y2, x2y1` non-edges.
    pub witness: Option<[usize; 4]>,
}

/// Peels isolated or dominating vertices until none remain. Returns the elimination
/// order, or `None` when the process gets stuck.
pub fn threshold_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let v = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] == remaining - 1))?;
        alive[v] = false;
        order.push(v);
        for &u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    Some(order)
}

/// Scans all 4-tuples for `uv, wx ∈ E` and `uw, vx ∉ E` (distinct vertices).
pub fn find_threshold_obstruction(g: &Graph) -> Option<[usize; 4]> {
    let edges: Vec<(usize, usize)> = g.edges().flat_map(|(a, b)| [(a, b), (b, a)]).collect();
    for &(u, v) in &edges {
        for &(w, x) in &edges {
            if w == u || w == v || x == u || x == v {
                continue;
            }
            if !g.has_edge(u, w) && !g.has_edge(v, x) {
                return Some([u, v, w, x]);
            }
        }
    }
    None
}

pub fn is_threshold(g: &Graph) -> ThresholdVerdict {
    if threshold_elimination_order(g).is_some() {
        ThresholdVerdict { is_threshold: true, witness: None }
    } else {
        let witness = find_threshold_obstruction(g);
        debug_assert!(witness.is_some(), "stuck elimination implies an obstruction");
        ThresholdVerdict { is_threshold: false, witness }
    }
}

/// Difference graph test: bipartite, with no edges `x1y1, x2y2` across the
/// bipartition whose swaps `x1y2, x2y1` are both missing.
///
/// Any two edges in different components form such a pair, so a difference graph has
/// at most one component with edges and the verdict does not depend on how
/// [`bipartition`] orients each component.
pub fn is_difference(g: &Graph) -> DifferenceVerdict {
    let Some(side) = bipartition(g) else {
        return DifferenceVerdict { is_difference: false, is_bipartite: false, witness: None };
    };
    // Edges oriented X -> Y.
    let cross: Vec<(usize, usize)> =
        g.edges().map(|(a, b)| if side[a] { (b, a) } else { (a, b) }).collect();
    for (i, &(x1, y1)) in cross.iter().enumerate() {
        for &(x2, y2) in &cross[i + 1..] {
            if x1 != x2 && y1 != y2 && !g.has_edge(x1, y2) && !g.has_edge(x2, y1) {
                return DifferenceVerdict {
                    is_difference: false,
                    is_bipartite: true,
                    witness: Some([x1, y1, x2, y2]),
                };
            }
        }
    }
    DifferenceVerdict { is_difference: true, is_bipartite: true, witness: None }
}

/// Side degree sequences `(D(X), D(Y))` under [`bipartition`], isolated vertices dropped.
pub fn side_degree_sequences(g: &Graph) -> Option<(DegreeSequence, DegreeSequence)> {
    let side = bipartition(g)?;
    let pick = |want: bool| {
        DegreeSequence::new(
            (0..g.n())
                .filter(|&v| side[v] == want && g.degree(v) > 0)
                .map(|v| g.degree(v) as u32)
                .collect(),
        )
    };
    Some((pick(false), pick(true)))
}

/// Second decider for difference graphs: after dropping isolated vertices, the side
/// degree sequences satisfy `D(X) = conjugate(D(Y))`.
///
/// Equality forces the bipartite realization to be the staircase one, so this
/// characterizes the graph, not only its degree sequences.
pub fn difference_by_degree_conjugate(g: &Graph) -> bool {
    match side_degree_sequences(g) {
        Some((dx, dy)) => dx == conjugate(&dy),
        None => false,
    }
}
