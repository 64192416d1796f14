//! Immutable simple undirected graphs on dense vertex ids.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`, one adjacency bit-row per vertex.
///
/// Rows are kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge_mut(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (the graph6 bit order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            self.adj[v]
                .intersection(VertexSet::full(v))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges, in the same order as [`Graph::edges`].
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            VertexSet::full(v)
                .difference(self.adj[v])
                .iter()
                .map(move |u| (u, v))
        })
    }

    pub fn check_set(&self, a: VertexSet) -> Result<()> {
        match a.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// `N(A)`, the union of the neighborhoods of members of `a`. May intersect `a`.
    pub fn neighborhood(&self, a: VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(self.neighborhood_of(a))
    }

    /// `N[A] = A ∪ N(A)`.
    pub fn closed_neighborhood(&self, a: VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(a.union(self.neighborhood_of(a)))
    }

    /// Unchecked `N(A)`; callers guarantee `a` is in range.
    #[inline]
    pub(crate) fn neighborhood_of(&self, a: VertexSet) -> VertexSet {
        a.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// True if no two members of `s` are adjacent.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `G[keep]`. Vertex `i` of the result is `map[i]` in `self`; `map` is increasing.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        let map = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// `G - W` for a vertex set `W`, with relabeling map.
    pub fn remove_vertices(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.induced_subgraph(self.vertices().difference(w))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|r| VertexSet::from_bits(r.bits() << shift)),
        );
        Ok(Graph { n, adj })
    }

    /// Connected components in order of least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood_of(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Two-colors the graph by BFS per component, roots on side A.
    ///
    /// Components are rooted at their least vertex and scanned in id order, so
    /// isolated vertices land on side A.
    pub fn bipartition(&self) -> Bipartiteness {
        let mut color = [None::<bool>; MAX_VERTICES];
        let mut parent = [usize::MAX; MAX_VERTICES];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let side_b = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        let side_a = self.vertices().difference(side_b);
        Bipartiteness::Bipartite(Bipartition { side_a, side_b })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }
}

/// Closes the BFS-tree paths from `u` and `w` (same color, adjacent) into a cycle.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path(u);
    let pw = path(w);
    // Strip the shared suffix down to the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

/// A 2-coloring with parts `side_a` and `side_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// An odd cycle, as a vertex sequence whose last vertex is adjacent to the first.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn partition(&self) -> Option<Bipartition> {
        match self {
            Bipartiteness::Bipartite(b) => Some(*b),
            Bipartiteness::OddCycle(_) => None,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
