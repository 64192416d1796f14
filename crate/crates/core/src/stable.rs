//! Maximum stable sets: the stability number, the family of all maximum
//! stable sets, its intersection (the core), and minimum deficient stable sets.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{can_match_into, MatchInto};
use crate::set::VertexSet;

/// Default cap on the number of maximum stable sets enumerated.
pub const DEFAULT_OMEGA_CAP: usize = 1_000_000;

/// Stability number restricted to the vertices in `allowed`.
///
/// Branch and bound: vertices with at most one neighbor among the candidates
/// are taken greedily, otherwise branch on a maximum-degree vertex, pruning
/// with a greedy clique cover of the remaining candidates.
pub fn stability_number_within(g: &Graph, allowed: VertexSet) -> usize {
    let rows: Vec<u64> = g.rows().iter().map(|r| r.bits()).collect();
    let mut best = 0;
    search(&rows, allowed.bits(), 0, &mut best);
    best
}

/// `α(G)`.
pub fn stability_number(g: &Graph) -> usize {
    stability_number_within(g, g.vertices())
}

fn search(rows: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    loop {
        let mut reduced = false;
        let mut it = cand;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if cand >> v & 1 == 0 {
                continue;
            }
            if (rows[v] & cand).count_ones() <= 1 {
                cand &= !(rows[v] | 1 << v);
                size += 1;
                reduced = true;
            }
        }
        if !reduced {
            break;
        }
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best
        || size + clique_cover_bound(rows, cand) <= *best
    {
        return;
    }
    let mut pivot = 0;
    let mut pivot_deg = 0;
    let mut it = cand;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let d = (rows[v] & cand).count_ones();
        if d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    search(rows, cand & !(rows[pivot] | 1 << pivot), size + 1, best);
    search(rows, cand & !(1 << pivot), size, best);
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on α.
fn clique_cover_bound(rows: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        let mut common = rows[v] & cand;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !(1 << w);
            common &= rows[w] & !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

/// The lexicographically least maximum stable set.
pub fn maximum_stable_set(g: &Graph) -> VertexSet {
    let alpha = stability_number(g);
    let mut chosen = VertexSet::EMPTY;
    let mut cand = g.vertices();
    for v in g.vertices() {
        if !cand.contains(v) || chosen.len() == alpha {
            continue;
        }
        let rest = cand.difference(g.neighbors(v)).without(v);
        if chosen.len() + 1 + stability_number_within(g, rest) == alpha {
            chosen.insert(v);
            cand = rest;
        } else {
            cand.remove(v);
        }
    }
    chosen
}

/// Maximum stable sets in lexicographic order of their sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega {
    pub sets: Vec<VertexSet>,
    /// True if more than `cap` maximum stable sets exist.
    pub truncated: bool,
}

impl Omega {
    /// `∩Ω`, or `None` if the enumeration was truncated.
    pub fn intersection(&self, g: &Graph) -> Option<VertexSet> {
        if self.truncated {
            return None;
        }
        Some(
            self.sets
                .iter()
                .fold(g.vertices(), |acc, &s| acc.intersection(s)),
        )
    }
}

/// Calls `visit` for each maximum stable set in lexicographic order.
pub fn for_each_maximum_stable_set<F>(g: &Graph, mut visit: F)
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let alpha = stability_number(g);
    let _ = enumerate_rec(g, g.vertices(), VertexSet::EMPTY, alpha, &mut visit);
}

fn enumerate_rec<F>(
    g: &Graph,
    cand: VertexSet,
    chosen: VertexSet,
    need: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    if need == 0 {
        return visit(chosen);
    }
    for v in cand {
        let rest = cand.above(v).difference(g.neighbors(v));
        if rest.len() + 1 < need || stability_number_within(g, rest) + 1 < need {
            continue;
        }
        enumerate_rec(g, rest, chosen.with(v), need - 1, visit)?;
    }
    ControlFlow::Continue(())
}

/// `Ω(G)`, truncated at `cap` sets.
pub fn enumerate_maximum_stable_sets(g: &Graph, cap: usize) -> Omega {
    let mut sets = Vec::new();
    let mut truncated = false;
    for_each_maximum_stable_set(g, |s| {
        if sets.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        sets.push(s);
        ControlFlow::Continue(())
    });
    Omega { sets, truncated }
}

/// `|Ω(G)|`, or `None` when it exceeds `cap`.
pub fn count_maximum_stable_sets(g: &Graph, cap: usize) -> Option<usize> {
    let mut count = 0;
    let mut over = false;
    for_each_maximum_stable_set(g, |_| {
        if count == cap {
            over = true;
            return ControlFlow::Break(());
        }
        count += 1;
        ControlFlow::Continue(())
    });
    (!over).then_some(count)
}

/// `core(G)`: the vertices `v` with `α(G - v) = α(G) - 1`.
pub fn core(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let alpha = stability_number_within(g, all);
    all.iter()
        .filter(|&v| stability_number_within(g, all.without(v)) < alpha)
        .collect()
}

/// `ξ(G) = |core(G)|`.
pub fn xi(g: &Graph) -> usize {
    core(g).len()
}

/// A stable set with more members than neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub witness: VertexSet,
    /// `|witness| - |N(witness)|`, always positive.
    pub deficiency: usize,
}

impl Obstruction {
    /// Wraps `s` if it is stable and deficient in `g`.
    pub fn new(g: &Graph, s: VertexSet) -> Option<Self> {
        let nb = g.neighborhood_of(s).len();
        (g.is_stable(s) && s.len() > nb).then(|| Obstruction {
            witness: s,
            deficiency: s.len() - nb,
        })
    }
}

/// A minimum-cardinality stable set `S` with `|S| > |N(S)|`, lexicographically
/// least among ties. Absent if every stable set has at least as many neighbors.
pub fn min_deficient_stable_set(g: &Graph) -> Option<Obstruction> {
    for k in 1..=g.order() {
        if let Some(s) = deficient_of_size(g, g.vertices(), VertexSet::EMPTY, k) {
            return Obstruction::new(g, s);
        }
    }
    None
}

fn deficient_of_size(g: &Graph, cand: VertexSet, chosen: VertexSet, k: usize) -> Option<VertexSet> {
    // N(S) only grows, and a deficient S of size k has |N(S)| < k.
    if g.neighborhood_of(chosen).len() >= k {
        return None;
    }
    if chosen.len() == k {
        return Some(chosen);
    }
    let need = k - chosen.len();
    for v in cand {
        if cand.above(v).len() + 1 < need {
            break;
        }
        let rest = cand.above(v).difference(g.neighbors(v));
        if rest.len() + 1 < need {
            continue;
        }
        if let Some(s) = deficient_of_size(g, rest, chosen.with(v), k) {
            return Some(s);
        }
    }
    None
}

/// Outcome of the Berge maximality test for a stable set `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BergeVerdict {
    /// Every stable set disjoint from `S` can be matched into `S`.
    Maximum,
    /// `violator` is stable, disjoint from `S`, and cannot be matched into `S`;
    /// `hall_set` is a subset of it with `|hall_set| > |N(hall_set) ∩ S|`.
    NotMaximum {
        violator: VertexSet,
        hall_set: VertexSet,
    },
}

impl BergeVerdict {
    pub fn is_maximum(&self) -> bool {
        matches!(self, BergeVerdict::Maximum)
    }
}

/// Decides whether the stable set `s` is maximum by checking that every stable
/// set disjoint from `s` can be matched into `s`.
///
/// Matchability into `s` is inherited by subsets, so only the maximal stable
/// sets of `G - s` are tested, in lexicographic order.
pub fn berge_is_maximum(g: &Graph, s: VertexSet) -> Result<BergeVerdict> {
    g.check_set(s)?;
    if !g.is_stable(s) {
        return Err(Error::NotStable(s));
    }
    let outside = g.vertices().difference(s);
    let mut verdict = BergeVerdict::Maximum;
    for_each_maximal_stable_set(g, outside, |a| match can_match_into(g, a, s) {
        Ok(MatchInto::Saturating(_)) => ControlFlow::Continue(()),
        Ok(MatchInto::HallViolator { set, .. }) => {
            verdict = BergeVerdict::NotMaximum {
                violator: a,
                hall_set: set,
            };
            ControlFlow::Break(())
        }
        Err(_) => unreachable!("a and s are disjoint"),
    });
    Ok(verdict)
}

/// Maximal stable sets of `G[within]` by Bron–Kerbosch on the complement, with pivoting.
pub fn for_each_maximal_stable_set<F>(g: &Graph, within: VertexSet, mut visit: F)
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    fn rec<F>(
        g: &Graph,
        within: VertexSet,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        if p.is_empty() {
            return if x.is_empty() {
                visit(r)
            } else {
                ControlFlow::Continue(())
            };
        }
        // "Non-neighbors" in the complement sense: vertices of `within` not adjacent and distinct.
        let compat = |v: usize| within.difference(g.neighbors(v)).without(v);
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| (p.intersection(compat(u)).len(), std::cmp::Reverse(u)))
            .expect("p nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(compat(pivot)) {
            let cv = compat(v);
            rec(g, within, r.with(v), p.intersection(cv), x.intersection(cv), visit)?;
            p.remove(v);
            x.insert(v);
        }
        ControlFlow::Continue(())
    }
    let _ = rec(
        g,
        within,
        VertexSet::EMPTY,
        within,
        VertexSet::EMPTY,
        &mut visit,
    );
}

/// `H = G[V - N[core(G)]]` with its relabeling map into `G`.
pub fn core_complement_subgraph(g: &Graph) -> (Graph, Vec<usize>) {
    let c = core(g);
    let closed = c.union(g.neighborhood_of(c));
    g.remove_vertices(closed).expect("in range")
}

/// Summary of the maximum-stable-set structure of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableReport {
    pub alpha: usize,
    pub core: VertexSet,
    pub xi: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<VertexSet>>,
    /// `None` when enumeration hit the cap.
    pub omega_count: Option<usize>,
}

impl StableReport {
    /// Computes α and the core; enumerates Ω only when `keep_omega` is set.
    pub fn compute(g: &Graph, omega_cap: usize, keep_omega: bool) -> Self {
        let alpha = stability_number(g);
        let core = core(g);
        let (omega, omega_count) = if keep_omega {
            let om = enumerate_maximum_stable_sets(g, omega_cap);
            let count = (!om.truncated).then_some(om.sets.len());
            (Some(om.sets), count)
        } else {
            (None, count_maximum_stable_sets(g, omega_cap))
        };
        StableReport {
            alpha,
            core,
            xi: core.len(),
            omega,
            omega_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for v in 1..n {
            for u in 0..v {
                e.push((u, v));
            }
        }
        g(n, &e)
    }

    // a=0 b=1 c=2 d=3 e=4
    fn fig2_g1() -> Graph {
        g(5, &[(0, 2), (2, 3), (2, 1), (2, 4), (3, 4)])
    }

    #[test]
    fn alpha_small() {
        for n in 1..=8 {
            assert_eq!(stability_number(&complete(n)), 1);
        }
        assert_eq!(stability_number(&c4()), 2);
        assert_eq!(stability_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(stability_number(&Graph::empty(7).unwrap()), 7);
    }

    #[test]
    fn omega_c4_and_diamond() {
        let om = enumerate_maximum_stable_sets(&c4(), 10);
        assert_eq!(om.sets, vec![[0, 2].into(), [1, 3].into()]);
        assert!(!om.truncated);
        let diamond = g(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        let om = enumerate_maximum_stable_sets(&diamond, 10);
        assert_eq!(om.sets, vec![[1, 2].into()]);
        let om = enumerate_maximum_stable_sets(&c4(), 1);
        assert_eq!(om.sets.len(), 1);
        assert!(om.truncated);
        assert_eq!(count_maximum_stable_sets(&c4(), 1), None);
        assert_eq!(count_maximum_stable_sets(&c4(), 2), Some(2));
    }

    #[test]
    fn omega_of_empty_graph_is_the_empty_set() {
        let e = Graph::empty(0).unwrap();
        assert_eq!(
            enumerate_maximum_stable_sets(&e, 5).sets,
            vec![VertexSet::EMPTY]
        );
        assert_eq!(core(&e), VertexSet::EMPTY);
    }

    #[test]
    fn core_and_s0_fig2_g1() {
        let g1 = fig2_g1();
        assert_eq!(core(&g1), [0, 1].into());
        let s0 = min_deficient_stable_set(&g1).unwrap();
        assert_eq!(s0.witness, [0, 1].into());
        assert_eq!(s0.deficiency, 1);
        let (h, map) = core_complement_subgraph(&g1);
        assert_eq!(map, vec![3, 4]);
        assert_eq!(h.size(), 1);
    }

    #[test]
    fn s0_prefers_isolated_vertex() {
        let gr = g(4, &[(1, 2), (2, 3)]);
        let s0 = min_deficient_stable_set(&gr).unwrap();
        assert_eq!(s0.witness, [0].into());
        assert_eq!(s0.deficiency, 1);
        assert_eq!(min_deficient_stable_set(&c4()), None);
    }

    #[test]
    fn lex_least_maximum_set() {
        assert_eq!(maximum_stable_set(&c4()), [0, 2].into());
        assert_eq!(maximum_stable_set(&fig2_g1()), [0, 1, 3].into());
    }

    #[test]
    fn berge_c4() {
        assert!(berge_is_maximum(&c4(), [0, 2].into()).unwrap().is_maximum());
        match berge_is_maximum(&c4(), [0].into()).unwrap() {
            BergeVerdict::NotMaximum { violator, hall_set } => {
                assert_eq!(violator, [1, 3].into());
                assert!(hall_set.is_subset(violator));
                let nb = c4().neighborhood_of(hall_set).intersection([0].into());
                assert!(hall_set.len() > nb.len());
            }
            BergeVerdict::Maximum => panic!("{{0}} is not maximum in C4"),
        }
        assert_eq!(
            berge_is_maximum(&c4(), [0, 1].into()),
            Err(Error::NotStable([0, 1].into()))
        );
    }

    #[test]
    fn maximal_stable_sets_of_p3() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let mut seen = vec![];
        for_each_maximal_stable_set(&p3, p3.vertices(), |s| {
            seen.push(s);
            ControlFlow::Continue(())
        });
        seen.sort_by(|a, b| a.lex_cmp(*b));
        assert_eq!(seen, vec![[0, 2].into(), [1].into()]);
    }

    #[test]
    fn report() {
        let r = StableReport::compute(&c4(), 10, true);
        assert_eq!((r.alpha, r.xi, r.omega_count), (2, 0, Some(2)));
        assert_eq!(r.omega.unwrap().len(), 2);
        let r = StableReport::compute(&fig2_g1(), 10, false);
        assert_eq!((r.alpha, r.xi, r.omega_count), (3, 2, Some(2)));
        assert!(r.omega.is_none());
    }
}
