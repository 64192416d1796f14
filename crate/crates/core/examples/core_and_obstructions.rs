//! Maximum stable sets, the core, and deficient-set obstructions.
//!
//! cargo run --example core_and_obstructions

use stablecore::generators::named;
use stablecore::stable::{core_complement_subgraph, enumerate_maximum_stable_sets};
use stablecore::{
    berge_is_maximum, canonical_obstruction, core, min_deficient_stable_set, stability_number,
    BergeVerdict,
};

fn main() {
    let lg = named("fig2_G2").unwrap();
    let g = &lg.graph;
    println!("alpha = {}", stability_number(g));
    let omega = enumerate_maximum_stable_sets(g, 1000);
    for s in &omega.sets {
        println!("maximum stable set {{{}}}", lg.names(*s).join(","));
    }
    println!("core = {{{}}}", lg.names(core(g)).join(","));

    // The smallest stable set with fewer neighbors than members.
    let s0 = min_deficient_stable_set(g).unwrap();
    println!(
        "minimum deficient set {{{}}}, deficiency {}",
        lg.names(s0.witness).join(","),
        s0.deficiency
    );
    println!(
        "canonical obstruction {{{}}}",
        lg.names(canonical_obstruction(g).unwrap()).join(",")
    );

    // Berge: a stable set is maximum iff every disjoint stable set matches into it.
    let small = lg.set(&["a", "b"]);
    match berge_is_maximum(g, small).unwrap() {
        BergeVerdict::Maximum => println!("{{a,b}} is maximum"),
        BergeVerdict::NotMaximum { violator, hall_set } => println!(
            "{{a,b}} is not maximum: {{{}}} cannot be matched into it (Hall set {{{}}})",
            lg.names(violator).join(","),
            lg.names(hall_set).join(",")
        ),
    }

    let (h, map) = core_complement_subgraph(g);
    let kept: Vec<&str> = map.iter().map(|&v| lg.labels[v].as_str()).collect();
    println!(
        "G - N[core] has vertices {{{}}}, alpha = {}, core size {}",
        kept.join(","),
        stability_number(&h),
        core(&h).len()
    );
}
