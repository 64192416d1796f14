//! Reading and writing graph6 and edge lists.
//!
//! cargo run --example graph6_io

use stablecore::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Error};

fn main() {
    let text = ">>graph6<<Cl\nC~\n\nBw\n";
    let graphs = parse_graph6(text).unwrap();
    for g in &graphs {
        println!("{} -> n={} m={} edges={:?}", emit_graph6(g), g.order(), g.size(), g.edges().collect::<Vec<_>>());
    }

    let p4 = parse_edge_list("# a path\n4\n0 1\n1 2\n2 3\n").unwrap();
    println!("edge list -> graph6 {}", emit_graph6(&p4));
    print!("{}", emit_edge_list(&p4));

    // Errors carry the offending line.
    match parse_graph6("Cl\nC~~\n") {
        Err(Error::Parse { line, message }) => println!("line {line}: {message}"),
        other => println!("unexpected: {other:?}"),
    }
}
