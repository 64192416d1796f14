//! Maximum matchings, König–Egerváry recognition and Hall-condition queries.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};
use crate::stable::{core, stability_number};

const NONE: usize = usize::MAX;

/// `mate[v]` is the partner of `v`, or `None`.
pub type Mates = Vec<Option<usize>>;

/// Maximum matching by Edmonds' blossom algorithm.
///
/// Free vertices are used as search roots in increasing id order and
/// neighbors are scanned in increasing id order, so the result is
/// deterministic.
pub fn blossom_matching(g: &Graph) -> Mates {
    let n = g.order();
    let mut st = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        in_queue: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in 0..n {
        if st.mate[root] == NONE {
            if let Some(end) = st.find_augmenting_path(root) {
                st.augment(end);
            }
        }
    }
    st.mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_queue[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = [false; MAX_VERTICES];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Hopcroft–Karp on a bipartite graph given by `left` vertex ids and
/// `row(l)`, the right-side neighbors of `l`. Left and right ids live in
/// separate spaces of size at most [`MAX_VERTICES`].
///
/// Returns `(left_mate, right_mate)`, indexed by id.
pub(crate) fn hopcroft_karp<F>(left: VertexSet, row: F) -> ([usize; MAX_VERTICES], [usize; MAX_VERTICES])
where
    F: Fn(usize) -> VertexSet,
{
    let mut left_mate = [NONE; MAX_VERTICES];
    let mut right_mate = [NONE; MAX_VERTICES];
    let mut dist = [NONE; MAX_VERTICES];
    loop {
        // BFS layers from free left vertices.
        let mut queue = VecDeque::new();
        for l in left {
            if left_mate[l] == NONE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = NONE;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for r in row(l) {
                match right_mate[r] {
                    NONE => found = true,
                    m if dist[m] == NONE => {
                        dist[m] = dist[l] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for l in left {
            if left_mate[l] == NONE {
                hk_dfs(l, &row, &mut left_mate, &mut right_mate, &mut dist);
            }
        }
    }
    (left_mate, right_mate)
}

fn hk_dfs<F>(
    l: usize,
    row: &F,
    left_mate: &mut [usize; MAX_VERTICES],
    right_mate: &mut [usize; MAX_VERTICES],
    dist: &mut [usize; MAX_VERTICES],
) -> bool
where
    F: Fn(usize) -> VertexSet,
{
    for r in row(l) {
        let m = right_mate[r];
        let ok = m == NONE
            || (dist[m] == dist[l].wrapping_add(1) && hk_dfs(m, row, left_mate, right_mate, dist));
        if ok {
            left_mate[l] = r;
            right_mate[r] = l;
            return true;
        }
    }
    dist[l] = NONE;
    false
}

/// Maximum matching: Hopcroft–Karp when the graph is bipartite, blossom otherwise.
pub fn maximum_matching(g: &Graph) -> Mates {
    match g.bipartition().partition() {
        Some(b) => {
            let (left_mate, _) = hopcroft_karp(b.side_a, |l| g.neighbors(l));
            let mut mates = vec![None; g.order()];
            for l in b.side_a {
                if left_mate[l] != NONE {
                    mates[l] = Some(left_mate[l]);
                    mates[left_mate[l]] = Some(l);
                }
            }
            mates
        }
        None => blossom_matching(g),
    }
}

/// Edges `(u, v)`, `u < v`, sorted, of a mate vector.
pub fn matching_edges(mates: &Mates) -> Vec<(usize, usize)> {
    mates
        .iter()
        .enumerate()
        .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
        .collect()
}

/// `μ(G)`.
pub fn matching_number(g: &Graph) -> usize {
    matching_edges(&maximum_matching(g)).len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub mu: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_perfect: bool,
    /// `α(G) + μ(G) = n`.
    pub is_ke: bool,
}

impl MatchingReport {
    pub fn compute(g: &Graph) -> Self {
        Self::with_alpha(g, stability_number(g))
    }

    /// Same as [`MatchingReport::compute`] with a precomputed `α(G)`.
    pub fn with_alpha(g: &Graph, alpha: usize) -> Self {
        let edges = matching_edges(&maximum_matching(g));
        let mu = edges.len();
        MatchingReport {
            mu,
            edges,
            is_perfect: 2 * mu == g.order(),
            is_ke: alpha + mu == g.order(),
        }
    }
}

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    stability_number(g) + matching_number(g) == g.order()
}

/// Result of trying to match a set `A` into a disjoint set `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchInto {
    /// A matching saturating `A`, as `(a, s)` pairs sorted by `a`.
    Saturating(Vec<(usize, usize)>),
    /// `set ⊆ A` with `|set| > |neighborhood|`, where `neighborhood = N(set) ∩ S`.
    HallViolator {
        set: VertexSet,
        neighborhood: VertexSet,
    },
}

impl MatchInto {
    pub fn is_saturating(&self) -> bool {
        matches!(self, MatchInto::Saturating(_))
    }
}

/// Is there a matching of `a` into `s` using only edges between them?
///
/// On failure the violator is the set of `a`-vertices reachable by
/// alternating paths from the least unsaturated vertex of `a`.
pub fn can_match_into(g: &Graph, a: VertexSet, s: VertexSet) -> Result<MatchInto> {
    g.check_set(a)?;
    g.check_set(s)?;
    let overlap = a.intersection(s);
    if !overlap.is_empty() {
        return Err(Error::Overlap(overlap));
    }
    let row = |x: usize| g.neighbors(x).intersection(s);
    let (left_mate, right_mate) = hopcroft_karp(a, row);
    let Some(root) = a.iter().find(|&x| left_mate[x] == NONE) else {
        return Ok(MatchInto::Saturating(
            a.iter().map(|x| (x, left_mate[x])).collect(),
        ));
    };
    let mut set = VertexSet::singleton(root);
    let mut neighborhood = VertexSet::EMPTY;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for y in row(x).difference(neighborhood) {
            neighborhood.insert(y);
            let m = right_mate[y];
            debug_assert!(m != NONE, "maximum matching has no augmenting path");
            if !set.contains(m) {
                set.insert(m);
                queue.push_back(m);
            }
        }
    }
    Ok(MatchInto::HallViolator { set, neighborhood })
}

/// Hall's condition tested on the single stable set `core(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HallOnCore {
    /// `|core(G)| <= |N(core(G))|`.
    pub holds: bool,
    pub core_size: usize,
    pub neighborhood_size: usize,
}

pub fn hall_condition_on_core(g: &Graph) -> HallOnCore {
    let c = core(g);
    let nb = g.neighborhood_of(c).len();
    HallOnCore {
        holds: c.len() <= nb,
        core_size: c.len(),
        neighborhood_size: nb,
    }
}
