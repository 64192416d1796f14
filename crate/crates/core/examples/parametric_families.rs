//! Parametric families and how their invariants scale.
//!
//! cargo run --example parametric_families

use stablecore::generators::{fig45, fig77_odd, remark_family};
use stablecore::{core, emit_graph6, stability_number};

fn main() {
    println!("fig45(p, r): alpha = p + r, xi = r + 1");
    for p in 1..=3 {
        for r in 1..=3 {
            let g = fig45(p, r).unwrap().graph;
            println!(
                "  p={p} r={r} n={:<2} alpha={} xi={} {}",
                g.order(),
                stability_number(&g),
                core(&g).len(),
                emit_graph6(&g)
            );
        }
    }

    println!("remark_family(k, p): xi = k while alpha < n/2 once p >= k + 3");
    for k in 1..=3 {
        let p = k + 3;
        let g = remark_family(k, p).unwrap().graph;
        println!(
            "  k={k} p={p} n={} alpha={} xi={}",
            g.order(),
            stability_number(&g),
            core(&g).len()
        );
    }

    println!("fig77_odd(p): odd order with a single core vertex");
    // p = 1 is rejected: that graph's core is not {c_2}.
    assert!(fig77_odd(1).is_err());
    for p in 2..=4 {
        let lg = fig77_odd(p).unwrap();
        let c: Vec<&str> = lg.names(core(&lg.graph));
        println!("  p={p} n={} core={c:?}", lg.graph.order());
    }
}
