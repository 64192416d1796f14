//! Runs the structural statement suite over all graphs on up to 5 vertices
//! and a G(n, p) sample, printing per-statement counts.
//!
//! cargo run --release --example theorem_sweep

use stablecore::theorems::run_suite;
use stablecore::verify::{verify_corpus, CorpusSpec, VerifyOptions};
use stablecore::Graph;

fn main() {
    let mut corpus = CorpusSpec::exhaustive(1..=5);
    corpus.sample_orders = vec![9];
    corpus.edge_probs = vec![0.3];
    corpus.samples = 500;
    corpus.seed = 42;
    let summary = verify_corpus(&corpus, &VerifyOptions::default()).unwrap();
    println!("{} graphs", summary.tally.graphs);
    println!("{:<10} {:>10} {:>8} {:>8}", "statement", "applicable", "passed", "failed");
    for (id, c) in &summary.tally.predicates {
        println!("{id:<10} {:>10} {:>8} {:>8}", c.applicable, c.passed, c.failed);
    }
    if let Some(f) = summary.failures.first() {
        println!("first failure: {} on {} {}", f.id, f.graph6, serde_json::to_string(&f.witness).unwrap());
    }

    // A single graph: K2 plus two isolated vertices.
    let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
    for v in run_suite(&g, 1..=2).iter().filter(|v| v.applicable) {
        println!("{:<10} holds={}", v.id, v.holds);
    }
}
