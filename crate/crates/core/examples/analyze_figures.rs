//! Full invariant report for every built-in named graph.
//!
//! cargo run --example analyze_figures

use stablecore::generators::{named, NAMED};
use stablecore::AnalysisReport;

fn main() {
    for id in NAMED {
        let lg = named(id).expect("named graphs pass their admission checks");
        let r = AnalysisReport::compute(&lg.graph);
        let core = lg.names(r.core).join(",");
        println!(
            "{id:<16} n={:<2} m={:<2} alpha={} mu={} xi={} core={{{core}}} |N(core)|={} ke={} pm={} qr={} {}",
            r.n,
            r.m,
            r.alpha,
            r.mu,
            r.xi,
            r.n_core_neighborhood_size,
            r.is_ke,
            r.has_perfect_matching,
            r.is_quasi_regularizable,
            r.classification.as_str(),
        );
        if let Some(obs) = r.obstruction {
            println!("{:<16} obstruction {{{}}}", "", lg.names(obs).join(","));
        }
    }
}
