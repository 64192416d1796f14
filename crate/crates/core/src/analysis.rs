//! Per-graph summary of every computed invariant.

use serde::{Serialize, Serializer};

use crate::format::emit_graph6;
use crate::graph::Graph;
use crate::matching::MatchingReport;
use crate::quasi_reg::{canonical_obstruction, is_quasi_regularizable_fast};
use crate::set::VertexSet;
use crate::stable::{core, count_maximum_stable_sets, stability_number, DEFAULT_OMEGA_CAP};
use crate::theorems::AlphaPlusClass;
use crate::verify::SCHEMA;

/// Number of maximum stable sets, or a marker that counting hit the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaCount {
    Exact(usize),
    Truncated,
}

impl Serialize for OmegaCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OmegaCount::Exact(c) => s.serialize_u64(*c as u64),
            OmegaCount::Truncated => s.serialize_str("truncated"),
        }
    }
}

impl std::fmt::Display for OmegaCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OmegaCount::Exact(c) => write!(f, "{c}"),
            OmegaCount::Truncated => f.write_str("truncated"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub xi: usize,
    pub core: VertexSet,
    pub n_core_neighborhood_size: usize,
    pub is_ke: bool,
    pub has_perfect_matching: bool,
    pub is_quasi_regularizable: bool,
    pub classification: AlphaPlusClass,
    /// A stable set larger than its neighborhood, present iff not quasi-regularizable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<VertexSet>,
    pub omega_count: OmegaCount,
}

impl AnalysisReport {
    pub fn compute(g: &Graph) -> Self {
        Self::with_omega_cap(g, DEFAULT_OMEGA_CAP)
    }

    pub fn with_omega_cap(g: &Graph, omega_cap: usize) -> Self {
        let alpha = stability_number(g);
        let c = core(g);
        let matching = MatchingReport::with_alpha(g, alpha);
        let qr = is_quasi_regularizable_fast(g);
        AnalysisReport {
            schema: SCHEMA,
            graph6: emit_graph6(g),
            n: g.order(),
            m: g.size(),
            alpha,
            mu: matching.mu,
            xi: c.len(),
            core: c,
            n_core_neighborhood_size: g.neighborhood_of(c).len(),
            is_ke: matching.is_ke,
            has_perfect_matching: matching.is_perfect,
            is_quasi_regularizable: qr,
            classification: AlphaPlusClass::from_xi(c.len()),
            obstruction: if qr { None } else { canonical_obstruction(g) },
            omega_count: count_maximum_stable_sets(g, omega_cap)
                .map_or(OmegaCount::Truncated, OmegaCount::Exact),
        }
    }

    /// Key-sorted JSON on one line.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string(&v).expect("serializable")
    }
}
