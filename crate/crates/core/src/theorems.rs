//! Structural statements about `α`, `core`, matchings and quasi-regularizability,
//! each evaluated on a concrete graph as "premise implies conclusion".
//!
//! The `P7[k]` and `T5[k]` bounds are evaluated as stated and fail when the
//! core is a set of at least two isolated vertices, e.g. the edgeless graph on
//! two vertices. Any other failing verdict points at a bug.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::graph::{Bipartition, Graph};
use crate::matching::MatchingReport;
use crate::quasi_reg::is_quasi_regularizable_fast;
use crate::set::VertexSet;
use crate::stable::{
    core, core_complement_subgraph, enumerate_maximum_stable_sets, stability_number, Omega,
    DEFAULT_OMEGA_CAP,
};

/// Default range of the parameter `k` for parameterized statements.
pub const DEFAULT_K_RANGE: RangeInclusive<usize> = 1..=4;

/// One piece of evidence in a failure witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Int(usize),
    Flag(bool),
    Set(VertexSet),
}

impl From<usize> for Evidence {
    fn from(v: usize) -> Self {
        Evidence::Int(v)
    }
}

impl From<bool> for Evidence {
    fn from(v: bool) -> Self {
        Evidence::Flag(v)
    }
}

impl From<VertexSet> for Evidence {
    fn from(v: VertexSet) -> Self {
        Evidence::Set(v)
    }
}

pub type Witness = BTreeMap<String, Evidence>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub id: String,
    /// The premise held on this graph.
    pub applicable: bool,
    /// Always true when not applicable.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// `α⁺` classification by `ξ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaPlusClass {
    #[serde(rename = "alpha0_plus")]
    Alpha0Plus,
    #[serde(rename = "alpha1_plus")]
    Alpha1Plus,
    NotAlphaPlus,
}

impl AlphaPlusClass {
    pub fn from_xi(xi: usize) -> Self {
        match xi {
            0 => AlphaPlusClass::Alpha0Plus,
            1 => AlphaPlusClass::Alpha1Plus,
            _ => AlphaPlusClass::NotAlphaPlus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AlphaPlusClass::Alpha0Plus => "alpha0_plus",
            AlphaPlusClass::Alpha1Plus => "alpha1_plus",
            AlphaPlusClass::NotAlphaPlus => "not_alpha_plus",
        }
    }
}

/// Classifies by `ξ(G)`: 0, 1, or more.
pub fn classify(g: &Graph) -> AlphaPlusClass {
    AlphaPlusClass::from_xi(core(g).len())
}

/// `α(G + e) = α(G)` for every non-edge `e`, checked by adding each one.
pub fn check_alpha_plus_by_definition(g: &Graph) -> bool {
    let alpha = stability_number(g);
    g.non_edges().all(|(u, v)| {
        let h = g.with_edge(u, v).expect("non-edge of g");
        stability_number(&h) == alpha
    })
}

/// Everything the predicates read, computed once per graph.
pub struct GraphFacts<'g> {
    pub graph: &'g Graph,
    pub n: usize,
    pub alpha: usize,
    pub core: VertexSet,
    pub xi: usize,
    pub core_neighborhood: VertexSet,
    pub isolated: VertexSet,
    pub matching: MatchingReport,
    pub quasi_regularizable: bool,
    pub bipartition: Option<Bipartition>,
    pub alpha_plus: bool,
    pub omega: Omega,
}

impl<'g> GraphFacts<'g> {
    pub fn compute(g: &'g Graph) -> Self {
        let alpha = stability_number(g);
        let c = core(g);
        GraphFacts {
            graph: g,
            n: g.order(),
            alpha,
            core: c,
            xi: c.len(),
            core_neighborhood: g.neighborhood_of(c),
            isolated: g.isolated_vertices(),
            matching: MatchingReport::with_alpha(g, alpha),
            quasi_regularizable: is_quasi_regularizable_fast(g),
            bipartition: g.bipartition().partition(),
            alpha_plus: check_alpha_plus_by_definition(g),
            omega: enumerate_maximum_stable_sets(g, DEFAULT_OMEGA_CAP),
        }
    }

    /// `α(G) > n/2`.
    fn alpha_over_half(&self) -> bool {
        2 * self.alpha > self.n
    }

    fn base_witness(&self) -> Witness {
        let mut w = Witness::new();
        w.insert("n".into(), self.n.into());
        w.insert("alpha".into(), self.alpha.into());
        w.insert("xi".into(), self.xi.into());
        w.insert("core".into(), self.core.into());
        w.insert("core_neighborhood".into(), self.core_neighborhood.into());
        w.insert("isolated".into(), self.isolated.into());
        w.insert("mu".into(), self.matching.mu.into());
        w.insert("perfect_matching".into(), self.matching.is_perfect.into());
        w.insert("ke".into(), self.matching.is_ke.into());
        w.insert("quasi_regularizable".into(), self.quasi_regularizable.into());
        w.insert("alpha_plus".into(), self.alpha_plus.into());
        w
    }
}

struct Check {
    applicable: bool,
    holds: bool,
    extra: Vec<(&'static str, Evidence)>,
}

impl Check {
    fn when(applicable: bool, holds: impl FnOnce() -> bool) -> Self {
        Check {
            applicable,
            holds: !applicable || holds(),
            extra: Vec::new(),
        }
    }
}

fn all_equal(flags: &[bool]) -> bool {
    flags.windows(2).all(|w| w[0] == w[1])
}

fn t1(f: &GraphFacts) -> Check {
    Check::when(true, || (f.xi <= 1) == f.alpha_plus)
}

fn p9(f: &GraphFacts) -> Check {
    Check::when(f.alpha_plus && f.isolated.is_empty(), || f.quasi_regularizable)
}

fn c2(f: &GraphFacts) -> Check {
    Check::when(f.alpha_plus && f.isolated.is_empty(), || 2 * f.alpha <= f.n)
}

fn p4(f: &GraphFacts) -> Check {
    if !f.alpha_over_half() {
        return Check::when(false, || true);
    }
    let unique_isolated = f.isolated.len() == 1 && {
        let v = f.isolated.first().expect("one isolated vertex");
        let (h, _) = f.graph.remove_vertices(VertexSet::singleton(v)).expect("in range");
        core(&h).is_empty() && 2 * stability_number(&h) + 1 == f.n
    };
    let mut c = Check::when(true, || {
        all_equal(&[f.alpha_plus, f.xi == 1, unique_isolated])
    });
    c.extra.push(("unique_isolated_condition", unique_isolated.into()));
    c
}

fn c5(f: &GraphFacts) -> Check {
    Check::when(f.alpha_over_half() && f.xi == 1, || f.n % 2 == 1)
}

fn t3(f: &GraphFacts) -> Check {
    Check::when(f.alpha_over_half(), || {
        let iso = f.isolated.len();
        (iso == 1 || f.xi >= 2) && (f.xi != 1 || iso == 1) && f.xi != 0
    })
}

fn c4h(f: &GraphFacts) -> Check {
    Check::when(f.alpha_over_half(), || f.xi >= 1)
}

fn p6(f: &GraphFacts) -> Check {
    let g = f.graph;
    let (h, map) = core_complement_subgraph(g);
    let h_omega = enumerate_maximum_stable_sets(&h, DEFAULT_OMEGA_CAP);
    let alpha_h = stability_number(&h);
    let no_isolated = h.isolated_vertices().is_empty();
    let alpha_drop = alpha_h + f.xi == f.alpha;
    let core_empty = core(&h).is_empty();
    let h_vertices: VertexSet = map.iter().copied().collect();
    let to_h = |s: VertexSet| -> VertexSet {
        s.intersection(h_vertices)
            .iter()
            .map(|v| map.binary_search(&v).expect("vertex of H"))
            .collect()
    };
    let restriction = if f.omega.truncated || h_omega.truncated {
        true
    } else {
        let images: BTreeSet<VertexSet> = f.omega.sets.iter().map(|&s| to_h(s)).collect();
        let targets: BTreeSet<VertexSet> = h_omega.sets.iter().copied().collect();
        images == targets
    };
    let outside_core = f.omega.sets.iter().all(|&s| {
        s.difference(f.core).len() <= g.neighborhood_of(s).difference(f.core_neighborhood).len()
    });
    let mut c = Check::when(true, || {
        no_isolated && alpha_drop && restriction && core_empty && outside_core
    });
    c.extra = vec![
        ("h_no_isolated", no_isolated.into()),
        ("h_alpha", alpha_h.into()),
        ("h_restriction", restriction.into()),
        ("h_core_empty", core_empty.into()),
        ("outside_core_inequality", outside_core.into()),
    ];
    c
}

fn t4(f: &GraphFacts) -> Check {
    Check::when(f.alpha_over_half(), || f.xi > f.core_neighborhood.len())
}

fn p7(f: &GraphFacts, k: usize) -> Check {
    Check::when(f.alpha_over_half() && f.xi <= k, || 2 * f.alpha <= f.n + k - 1)
}

fn t5(f: &GraphFacts, k: usize) -> Check {
    let bound = f.n + k - 1;
    Check::when(f.isolated.len() != 1 && 2 * f.alpha > bound, || {
        f.xi > k && (bound % 2 == 1 || f.xi >= k + 2)
    })
}

fn l4_c3(f: &GraphFacts) -> Check {
    Check::when(f.matching.is_ke, || {
        let half = 2 * f.alpha == f.n;
        f.alpha >= f.matching.mu
            && 2 * f.alpha >= f.n
            && half == f.matching.is_perfect
            && (f.isolated.is_empty() || f.alpha_over_half())
    })
}

fn p5_t6(f: &GraphFacts) -> Check {
    Check::when(f.matching.is_ke, || {
        let hall_fails = f.xi > f.core_neighborhood.len();
        all_equal(&[
            f.alpha_over_half(),
            !f.matching.is_perfect,
            !f.quasi_regularizable,
            hall_fails,
        ]) && all_equal(&[
            2 * f.alpha == f.n,
            f.matching.is_perfect,
            f.quasi_regularizable,
            !hall_fails,
        ])
    })
}

/// Is there a 2-coloring whose two sides are both maximum stable sets?
///
/// Sides of any 2-coloring are stable, so this asks for `n = 2α` and a choice
/// of orientation per component putting exactly `α` vertices on side A.
fn has_balanced_bipartition(f: &GraphFacts, b: Bipartition) -> bool {
    if 2 * f.alpha != f.n {
        return false;
    }
    if b.side_a.len() == f.alpha {
        return true;
    }
    // Reachable side-A sizes over component side swaps.
    let mut reach: u128 = 1;
    for comp in f.graph.components() {
        let a = comp.intersection(b.side_a).len();
        let bb = comp.intersection(b.side_b).len();
        reach = (reach << a) | (reach << bb);
    }
    reach >> f.alpha & 1 == 1
}

fn p8(f: &GraphFacts) -> Check {
    let Some(b) = f.bipartition.filter(|_| f.isolated.len() != 1) else {
        return Check::when(false, || true);
    };
    let balanced = has_balanced_bipartition(f, b);
    let mut c = Check::when(true, || f.xi >= 2 || (f.xi == 0 && balanced));
    c.extra.push(("balanced_bipartition", balanced.into()));
    c
}

fn tb(f: &GraphFacts) -> Check {
    Check::when(f.bipartition.is_some() && f.xi == 1, || {
        f.isolated.len() == 1 && f.n % 2 == 1
    })
}

fn c6(f: &GraphFacts) -> Check {
    let applicable = f.bipartition.is_some() && f.isolated.len() != 1;
    let all = f.graph.vertices();
    let partition = applicable
        && 2 * f.alpha == f.n
        && f
            .omega
            .sets
            .iter()
            .any(|&s| f.graph.is_stable(all.difference(s)));
    let mut c = Check::when(applicable, || {
        all_equal(&[f.alpha_plus, f.matching.is_perfect, partition])
    });
    c.extra.push(("two_maximum_sets_partition", partition.into()));
    c
}

fn pb(f: &GraphFacts) -> Check {
    Check::when(f.bipartition.is_some() && f.isolated.len() != 1, || {
        f.alpha_over_half() == (f.xi >= 2)
    })
}

fn mix(f: &GraphFacts) -> Check {
    Check::when(f.n >= 1, || {
        let s = f.alpha + f.matching.mu;
        f.n / 2 < s && s <= f.n
    })
}

/// Evaluates every statement on `g`; `P7` runs for each `k >= 2` and `T5` for
/// each `k >= 1` in `k_range`. Verdicts are sorted by id.
pub fn run_suite(g: &Graph, k_range: RangeInclusive<usize>) -> Vec<TheoremVerdict> {
    let facts = GraphFacts::compute(g);
    run_suite_on(&facts, k_range)
}

pub fn run_suite_on(f: &GraphFacts, k_range: RangeInclusive<usize>) -> Vec<TheoremVerdict> {
    let mut checks: Vec<(String, Check)> = vec![
        ("T1".into(), t1(f)),
        ("P9".into(), p9(f)),
        ("C2".into(), c2(f)),
        ("P4".into(), p4(f)),
        ("C5".into(), c5(f)),
        ("T3".into(), t3(f)),
        ("C4h".into(), c4h(f)),
        ("P6".into(), p6(f)),
        ("T4".into(), t4(f)),
        ("L4/C3".into(), l4_c3(f)),
        ("P5/T6".into(), p5_t6(f)),
        ("P8".into(), p8(f)),
        ("TB".into(), tb(f)),
        ("C6".into(), c6(f)),
        ("PB".into(), pb(f)),
        ("MIX".into(), mix(f)),
    ];
    for k in k_range {
        if k >= 2 {
            checks.push((format!("P7[k={k}]"), p7(f, k)));
        }
        if k >= 1 {
            checks.push((format!("T5[k={k}]"), t5(f, k)));
        }
    }
    let mut verdicts: Vec<TheoremVerdict> = checks
        .into_iter()
        .map(|(id, c)| {
            let witness = (!c.holds).then(|| {
                let mut w = f.base_witness();
                w.extend(c.extra.into_iter().map(|(k, v)| (k.to_string(), v)));
                w
            });
            TheoremVerdict {
                id,
                applicable: c.applicable,
                holds: c.holds,
                witness,
            }
        })
        .collect();
    verdicts.sort_by(|a, b| a.id.cmp(&b.id));
    verdicts
}

/// Per-statement counts over a corpus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PredicateCounts {
    pub applicable: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteTally {
    pub graphs: u64,
    pub predicates: BTreeMap<String, PredicateCounts>,
}

impl SuiteTally {
    pub fn add(&mut self, verdicts: &[TheoremVerdict]) {
        self.graphs += 1;
        for v in verdicts {
            let c = self.predicates.entry(v.id.clone()).or_default();
            if v.applicable {
                c.applicable += 1;
                if v.holds {
                    c.passed += 1;
                }
            }
            if !v.holds {
                c.failed += 1;
            }
        }
    }

    pub fn merge(&mut self, other: &SuiteTally) {
        self.graphs += other.graphs;
        for (id, c) in &other.predicates {
            let e = self.predicates.entry(id.clone()).or_default();
            e.applicable += c.applicable;
            e.passed += c.passed;
            e.failed += c.failed;
        }
    }

    pub fn failures(&self) -> u64 {
        self.predicates.values().map(|c| c.failed).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, k1_union_complete, named};

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&cycle(4).unwrap()), AlphaPlusClass::Alpha0Plus);
        let paw = named("fig1_K3_plus_e").unwrap().graph;
        assert_eq!(classify(&paw), AlphaPlusClass::Alpha1Plus);
        let diamond = named("fig1_diamond").unwrap().graph;
        assert_eq!(classify(&diamond), AlphaPlusClass::NotAlphaPlus);
    }

    #[test]
    fn alpha_plus_by_definition_examples() {
        assert!(check_alpha_plus_by_definition(&cycle(4).unwrap()));
        assert!(!check_alpha_plus_by_definition(
            &named("fig1_diamond").unwrap().graph
        ));
        assert!(check_alpha_plus_by_definition(&k1_union_complete(2).unwrap()));
    }

    #[test]
    fn suite_ids_sorted_and_unique() {
        let v = run_suite(&cycle(5).unwrap(), DEFAULT_K_RANGE);
        let ids: Vec<_> = v.iter().map(|x| x.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        // 16 fixed + P7 for k = 2..4 + T5 for k = 1..4
        assert_eq!(ids.len(), 23);
        assert!(v.iter().all(|x| x.holds && x.witness.is_none()));
    }

    #[test]
    fn vacuous_verdicts_hold() {
        let v = run_suite(&cycle(4).unwrap(), DEFAULT_K_RANGE);
        for x in &v {
            if !x.applicable {
                assert!(x.holds, "{}", x.id);
            }
        }
    }

    #[test]
    fn balanced_bipartition_needs_side_swap() {
        // Two disjoint edges labeled so the BFS coloring is unbalanced: 0-2, 1-3
        // gives A = {0,1}, B = {2,3}, already balanced; use P2 + P4 instead.
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        let f = GraphFacts::compute(&g);
        assert_eq!(f.alpha, 3);
        let b = f.bipartition.unwrap();
        assert!(has_balanced_bipartition(&f, b));
    }

    #[test]
    fn bounds_fail_when_core_is_isolated_set() {
        // K2 plus two isolated vertices: n = 4, α = 3, ξ = 2, N(core) empty.
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let v = run_suite(&g, DEFAULT_K_RANGE);
        let failed: Vec<_> = v.iter().filter(|x| !x.holds).map(|x| x.id.as_str()).collect();
        assert_eq!(failed, ["P7[k=2]", "T5[k=1]", "T5[k=2]"]);
        // One isolated vertex is fine.
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(run_suite(&g, DEFAULT_K_RANGE).iter().all(|x| x.holds));
    }

    #[test]
    fn witness_on_forced_failure() {
        let g = cycle(4).unwrap();
        let mut f = GraphFacts::compute(&g);
        // Corrupt a fact: the suite must report it rather than panic.
        f.alpha_plus = false;
        let v = run_suite_on(&f, 1..=1);
        let t1 = v.iter().find(|x| x.id == "T1").unwrap();
        assert!(!t1.holds);
        let w = t1.witness.as_ref().unwrap();
        assert_eq!(w["xi"], Evidence::Int(0));
    }
}
