//! Matchings, the König-Egerváry property and quasi-regularizability.
//!
//! cargo run --example koenig_egervary

use stablecore::generators::{cycle, fig77, named, path};
use stablecore::{
    can_match_into, hall_condition_on_core, is_quasi_regularizable_fast, stability_number, Graph,
    MatchInto, MatchingReport,
};

fn show(name: &str, g: &Graph) {
    let m = MatchingReport::compute(g);
    let hall = hall_condition_on_core(g);
    println!(
        "{name:<12} alpha={} mu={} ke={} perfect={} qr={} |core|={} |N(core)|={}",
        stability_number(g),
        m.mu,
        m.is_ke,
        m.is_perfect,
        is_quasi_regularizable_fast(g),
        hall.core_size,
        hall.neighborhood_size
    );
}

fn main() {
    show("P5", &path(5).unwrap());
    show("C5", &cycle(5).unwrap());
    show("C6", &cycle(6).unwrap());
    show("fig3_graph", &named("fig3_graph").unwrap().graph);
    show("fig56_graph", &named("fig56_graph").unwrap().graph);
    for p in 1..=3 {
        show(&format!("fig77({p})"), &fig77(p).unwrap().graph);
    }

    // Matching one vertex set into another, with a Hall violator on failure.
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    match can_match_into(&star, [1, 2, 3].into(), [0].into()).unwrap() {
        MatchInto::Saturating(pairs) => println!("matched: {pairs:?}"),
        MatchInto::HallViolator { set, neighborhood } => {
            println!("leaves {set} have only {neighborhood} as neighbors")
        }
    }
}
