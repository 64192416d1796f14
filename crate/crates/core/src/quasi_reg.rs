//! Quasi-regularizability, decided two ways, and deficient-set obstructions.
//!
//! A graph is quasi-regularizable when its edges can be given non-negative
//! integer multiplicities making it a regular multigraph of nonzero degree,
//! equivalently when every stable set `S` has `|S| <= |N(S)|`. Both
//! characterizations make the graph on zero vertices quasi-regularizable.

use crate::graph::Graph;
use crate::matching::hopcroft_karp;
use crate::set::VertexSet;
use crate::stable::{core, min_deficient_stable_set, stability_number, Obstruction};

/// Decides quasi-regularizability by enumerating stable sets.
///
/// Exponential; intended as a reference for small graphs. On `false`, returns
/// the minimum deficient stable set.
pub fn is_quasi_regularizable_oracle(g: &Graph) -> (bool, Option<Obstruction>) {
    match min_deficient_stable_set(g) {
        Some(obs) => (false, Some(obs)),
        None => (true, None),
    }
}

/// Decides quasi-regularizability in polynomial time.
///
/// Builds the bipartite double cover with parts `V` and `V'` and edges
/// `u v'` for every edge `uv`; `G` is quasi-regularizable iff that cover has a
/// perfect matching.
pub fn is_quasi_regularizable_fast(g: &Graph) -> bool {
    let (left_mate, _) = hopcroft_karp(g.vertices(), |v| g.neighbors(v));
    g.vertices().iter().all(|v| left_mate[v] != usize::MAX)
}

/// A stable set `S` with `|S| > |N(S)|` built canonically.
///
/// When `α(G) > n/2` this is `core(G)`; otherwise the minimum deficient
/// stable set, if any.
pub fn canonical_obstruction(g: &Graph) -> Option<VertexSet> {
    if 2 * stability_number(g) > g.order() {
        return Some(core(g));
    }
    min_deficient_stable_set(g).map(|o| o.witness)
}
