//! Known values on small and named graphs, one check per documented example.

use stablecore::generators::{
    complete, cycle, fig45, fig77, fig77_odd, k1_union_c4, k1_union_complete, named, path,
    remark_family,
};
use stablecore::matching::MatchingReport;
use stablecore::stable::{core_complement_subgraph, enumerate_maximum_stable_sets};
use stablecore::theorems::{check_alpha_plus_by_definition, run_suite, DEFAULT_K_RANGE};
use stablecore::*;

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

#[test]
fn neighborhoods() {
    let p3 = path(3).unwrap();
    assert_eq!(p3.neighborhood(set(&[0, 2])).unwrap(), set(&[1]));
    assert_eq!(p3.neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
    assert_eq!(p3.closed_neighborhood(set(&[1])).unwrap(), set(&[0, 1, 2]));
    assert_eq!(p3.closed_neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
    let g1 = named("fig2_G1").unwrap();
    let ab = g1.set(&["a", "b"]);
    assert_eq!(g1.graph.neighborhood(ab).unwrap(), g1.set(&["c"]));
    assert_eq!(g1.graph.closed_neighborhood(ab).unwrap(), g1.set(&["a", "b", "c"]));
}

#[test]
fn isolated_vertices() {
    assert_eq!(Graph::empty(1).unwrap().isolated_vertices(), set(&[0]));
    assert!(cycle(4).unwrap().isolated_vertices().is_empty());
    let g = k1_union_c4().unwrap();
    assert_eq!(g.isolated_vertices().len(), 1);
    assert_eq!(g.order(), 5);
}

#[test]
fn induced_subgraphs() {
    let c4 = cycle(4).unwrap();
    assert_eq!(c4.induced_subgraph(c4.vertices()).unwrap().0, c4);
    // Any three vertices of C4 induce P3.
    for drop in 0..4 {
        let (h, _) = c4.induced_subgraph(c4.vertices().without(drop)).unwrap();
        assert_eq!((h.order(), h.size()), (3, 2));
    }
    let g1 = named("fig2_G1").unwrap();
    let closed = g1.graph.closed_neighborhood(g1.set(&["a", "b"])).unwrap();
    let (h, map) = g1.graph.remove_vertices(closed).unwrap();
    assert_eq!((h.order(), h.size()), (2, 1));
    let names: Vec<&str> = map.iter().map(|&v| g1.labels[v].as_str()).collect();
    assert_eq!(names, ["d", "e"]);
}

#[test]
fn bipartitions() {
    let b = cycle(4).unwrap().bipartition().partition().unwrap();
    assert_eq!((b.side_a, b.side_b), (set(&[0, 2]), set(&[1, 3])));
    match complete(3).unwrap().bipartition() {
        Bipartiteness::OddCycle(c) => assert_eq!(c.len(), 3),
        other => panic!("{other:?}"),
    }
    // a_p, b_p and c_1 form a triangle.
    let g = fig77(2).unwrap();
    match g.graph.bipartition() {
        Bipartiteness::OddCycle(c) => {
            let c: VertexSet = c.into_iter().collect();
            assert_eq!(c, g.set(&["a_2", "b_2", "c_1"]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn graph6_and_edge_lists() {
    let k4 = parse_graph6_line("C~", 1).unwrap();
    assert_eq!(k4, complete(4).unwrap());
    let c4 = parse_graph6_line("Cl", 1).unwrap();
    assert_eq!(c4.edges().collect::<Vec<_>>(), [(0, 1), (1, 2), (0, 3), (2, 3)]);
    assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), path(3).unwrap());
    let e = parse_edge_list("2\n0 1\n1 0").unwrap();
    assert_eq!(e.size(), 1);
    assert_eq!(parse_edge_list("1\n").unwrap(), Graph::empty(1).unwrap());
}

#[test]
fn stability_numbers() {
    for n in 1..=8 {
        assert_eq!(stability_number(&complete(n).unwrap()), 1);
    }
    assert_eq!(stability_number(&cycle(4).unwrap()), 2);
    assert_eq!(stability_number(&fig45(3, 2).unwrap().graph), 5);
}

#[test]
fn maximum_stable_set_lists() {
    let c4 = enumerate_maximum_stable_sets(&cycle(4).unwrap(), 100);
    assert_eq!(c4.sets, [set(&[0, 2]), set(&[1, 3])]);
    let d = named("fig1_diamond").unwrap();
    let om = enumerate_maximum_stable_sets(&d.graph, 100);
    assert_eq!(om.sets.len(), 1);
    let s = om.sets[0];
    assert_eq!(s.len(), 2);
    assert!(s.iter().all(|v| d.graph.degree(v) == 2));
    let g2 = named("fig2_G2").unwrap();
    let om = enumerate_maximum_stable_sets(&g2.graph, 100);
    assert_eq!(
        om.sets,
        [g2.set(&["a", "b", "c", "f"]), g2.set(&["a", "b", "c", "g"])]
    );
}

#[test]
fn cores() {
    let g1 = named("fig2_G1").unwrap();
    assert_eq!(core(&g1.graph), g1.set(&["a", "b"]));
    for p in 1..=6 {
        let lg = fig77(p).unwrap();
        assert_eq!(core(&lg.graph), lg.set(&["c_2"]));
    }
    assert!(core(&cycle(4).unwrap()).is_empty());
    assert_eq!(xi(&named("fig1_K3_plus_e").unwrap().graph), 1);
    assert_eq!(xi(&fig45(3, 2).unwrap().graph), 3);
    assert_eq!(xi(&named("fig3_graph").unwrap().graph), 2);
}

#[test]
fn minimum_deficient_sets() {
    let g1 = named("fig2_G1").unwrap();
    let o = min_deficient_stable_set(&g1.graph).unwrap();
    assert_eq!((o.witness, o.deficiency), (g1.set(&["a", "b"]), 1));
    let g2 = named("fig2_G2").unwrap();
    assert_eq!(min_deficient_stable_set(&g2.graph).unwrap().witness, g2.set(&["a", "b"]));
    assert_eq!(min_deficient_stable_set(&named("fig1_diamond").unwrap().graph), None);
}

#[test]
fn berge_maximality() {
    let c4 = cycle(4).unwrap();
    assert!(berge_is_maximum(&c4, set(&[0, 2])).unwrap().is_maximum());
    match berge_is_maximum(&c4, set(&[0])).unwrap() {
        BergeVerdict::NotMaximum { violator, hall_set } => {
            assert_eq!(violator, set(&[1, 3]));
            assert!(hall_set.len() > c4.neighborhood(hall_set).unwrap().intersection(set(&[0])).len());
        }
        v => panic!("{v:?}"),
    }
    let f = named("fig34_graph").unwrap();
    let s = f.set(&["a", "b", "c", "d", "e"]);
    assert!(berge_is_maximum(&f.graph, s).unwrap().is_maximum());
}

#[test]
fn core_complement() {
    let g1 = named("fig2_G1").unwrap();
    let (h, map) = core_complement_subgraph(&g1.graph);
    assert_eq!((h.order(), h.size()), (2, 1));
    assert_eq!(map, vec![g1.id("d"), g1.id("e")]);
    let c4 = cycle(4).unwrap();
    assert_eq!(core_complement_subgraph(&c4).0, c4);
    let f = fig45(2, 1).unwrap();
    let (_, map) = core_complement_subgraph(&f.graph);
    assert_eq!(map, vec![f.id("a_1"), f.id("b_1")]);
}

#[test]
fn matchings() {
    assert_eq!(matching_number(&path(3).unwrap()), 1);
    let f3 = MatchingReport::compute(&named("fig3_graph").unwrap().graph);
    assert_eq!((f3.mu, f3.is_perfect, f3.is_ke), (3, true, true));
    assert!(!MatchingReport::compute(&named("fig56_graph").unwrap().graph).is_perfect);
    assert!(!is_koenig_egervary(&complete(3).unwrap()));
    for n in 1..=6 {
        for g in stablecore::generators::enumerate_labeled(n).unwrap() {
            if g.is_bipartite() {
                assert!(is_koenig_egervary(&g), "{g:?}");
            }
        }
    }
}

#[test]
fn matching_into() {
    let c4 = cycle(4).unwrap();
    assert!(can_match_into(&c4, set(&[1, 3]), set(&[0, 2])).unwrap().is_saturating());
    assert!(can_match_into(&c4, VertexSet::EMPTY, set(&[0])).unwrap().is_saturating());
    assert!(matches!(
        can_match_into(&c4, set(&[0, 1]), set(&[1, 2])),
        Err(Error::Overlap(_))
    ));
}

#[test]
fn hall_on_core() {
    let h = hall_condition_on_core(&named("fig57_graph").unwrap().graph);
    assert_eq!((h.holds, h.core_size, h.neighborhood_size), (true, 3, 4));
    let h = hall_condition_on_core(&named("fig2_G1").unwrap().graph);
    assert_eq!((h.holds, h.core_size, h.neighborhood_size), (false, 2, 1));
    let h = hall_condition_on_core(&named("fig4_graph").unwrap().graph);
    assert_eq!((h.holds, h.core_size, h.neighborhood_size), (false, 2, 1));
}

#[test]
fn quasi_regularizability() {
    let diamond = named("fig1_diamond").unwrap().graph;
    let p3 = path(3).unwrap();
    assert_eq!(is_quasi_regularizable_oracle(&diamond), (true, None));
    let (qr, obs) = is_quasi_regularizable_oracle(&p3);
    assert!(!qr);
    assert_eq!(obs.unwrap().witness, set(&[0, 2]));
    assert!(is_quasi_regularizable_oracle(&named("fig56_graph").unwrap().graph).0);
    assert!(is_quasi_regularizable_fast(&diamond));
    assert!(!is_quasi_regularizable_fast(&p3));
    assert!(!is_quasi_regularizable_fast(&named("fig57_graph").unwrap().graph));
}

#[test]
fn canonical_obstructions() {
    let g1 = named("fig2_G1").unwrap();
    assert_eq!(canonical_obstruction(&g1.graph), Some(g1.set(&["a", "b"])));
    let f = fig45(3, 2).unwrap().graph;
    let w = canonical_obstruction(&f).unwrap();
    assert_eq!((w.len(), f.neighborhood(w).unwrap().len()), (3, 1));
    assert_eq!(canonical_obstruction(&cycle(4).unwrap()), None);
}

#[test]
fn suite_examples() {
    let f = fig45(3, 2).unwrap().graph;
    let v = run_suite(&f, 1..=1);
    let t5 = v.iter().find(|v| v.id == "T5[k=1]").unwrap();
    assert!(t5.applicable && t5.holds);
    assert_eq!((stability_number(&f), f.order(), xi(&f)), (5, 8, 3));

    let g = k1_union_c4().unwrap();
    let c2 = run_suite(&g, DEFAULT_K_RANGE).into_iter().find(|v| v.id == "C2").unwrap();
    assert!(!c2.applicable);
    assert_eq!(stability_number(&g), 3);
    assert!(check_alpha_plus_by_definition(&g));

    let r = remark_family(2, 6).unwrap().graph;
    assert_eq!(xi(&r), 2);
    assert!(2 * stability_number(&r) < r.order());
}

#[test]
fn alpha_plus_examples() {
    assert!(check_alpha_plus_by_definition(&cycle(4).unwrap()));
    assert!(!check_alpha_plus_by_definition(&named("fig1_diamond").unwrap().graph));
    assert!(check_alpha_plus_by_definition(&k1_union_complete(2).unwrap()));
    assert_eq!(classify(&cycle(4).unwrap()), AlphaPlusClass::Alpha0Plus);
    assert_eq!(classify(&named("fig1_K3_plus_e").unwrap().graph), AlphaPlusClass::Alpha1Plus);
    assert_eq!(classify(&named("fig1_diamond").unwrap().graph), AlphaPlusClass::NotAlphaPlus);
}

#[test]
fn generator_shapes() {
    let order_size = |id: &str| {
        let g = named(id).unwrap().graph;
        (g.order(), g.size())
    };
    assert_eq!(order_size("fig2_G1"), (5, 5));
    assert_eq!(order_size("fig1_diamond"), (4, 5));
    assert_eq!(order_size("fig34_graph"), (8, 7));

    let f = fig45(3, 2).unwrap().graph;
    assert_eq!((stability_number(&f), xi(&f)), (5, 3));
    let f = fig45(1, 1).unwrap().graph;
    assert_eq!((f.order(), stability_number(&f), xi(&f)), (3, 2, 2));
    let f = fig45(4, 3).unwrap().graph;
    let c = core(&f);
    assert_eq!((stability_number(&f), c.len(), f.neighborhood(c).unwrap().len()), (7, 4, 1));

    let g = fig77(2).unwrap();
    assert_eq!(g.graph.order(), 6);
    assert!(is_koenig_egervary(&g.graph));
    assert_eq!(core(&g.graph), g.set(&["c_2"]));
    let g = fig77_odd(2).unwrap().graph;
    assert_eq!((g.order(), xi(&g)), (7, 1));

    let r = remark_family(2, 6).unwrap().graph;
    assert_eq!((r.order(), xi(&r), stability_number(&r)), (8, 2, 3));
    let r = remark_family(1, 1).unwrap().graph;
    assert_eq!(r.edges().collect::<Vec<_>>(), [(0, 1)]);
    let r = remark_family(3, 7).unwrap().graph;
    assert_eq!((xi(&r), stability_number(&r), r.order()), (3, 4, 10));
}
