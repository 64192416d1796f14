//! Named example graphs, parametric families, and graph corpora.
//!
//! Figure graphs are reconstructed from their drawings: consecutive marked
//! vertices on one drawn segment are adjacent. Each reconstruction is gated
//! by the properties stated for it and is rejected if any of them fails.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{is_koenig_egervary, maximum_matching, matching_edges};
use crate::quasi_reg::is_quasi_regularizable_fast;
use crate::set::VertexSet;
use crate::stable::{core, stability_number};

/// Largest `n` accepted by [`enumerate_labeled`].
pub const LABELED_CAP: usize = 7;

/// A graph together with a display label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeled {
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Labeled {
    fn build(family: &str, labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index = |l: &str| {
            labels
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| Error::param(family, format!("no vertex labeled {l}")))
        };
        let pairs = edges
            .iter()
            .map(|&(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Labeled {
            graph: Graph::from_edges(labels.len(), &pairs)?,
            labels: labels.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn from_owned(family: &str, labels: Vec<String>, edges: &[(String, String)]) -> Result<Self> {
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let e: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Labeled::build(family, &refs, &e)
    }

    /// Vertex id of a label.
    pub fn id(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("no vertex labeled {label}"))
    }

    /// Vertex set of several labels.
    pub fn set(&self, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| self.id(l)).collect()
    }

    pub fn names(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.labels[v].as_str()).collect()
    }
}

/// Identifiers accepted by [`named`].
pub const NAMED: &[&str] = &[
    "fig1_diamond",
    "fig1_K3_plus_e",
    "fig2_G1",
    "fig2_G2",
    "fig34_graph",
    "fig4_graph",
    "fig3_graph",
    "fig56_graph",
    "fig57_graph",
];

/// One of the fixed example graphs, checked against its stated properties.
pub fn named(id: &str) -> Result<Labeled> {
    let g = match id {
        "fig1_diamond" => Labeled::build(
            id,
            &["l", "m", "r", "t"],
            &[("l", "m"), ("m", "r"), ("m", "t"), ("l", "t"), ("r", "t")],
        )?,
        "fig1_K3_plus_e" => Labeled::build(
            id,
            &["l", "m", "r", "t"],
            &[("l", "m"), ("m", "r"), ("m", "t"), ("t", "r")],
        )?,
        "fig2_G1" => Labeled::build(
            id,
            &["a", "b", "c", "d", "e"],
            &[("a", "c"), ("c", "d"), ("c", "b"), ("c", "e"), ("d", "e")],
        )?,
        "fig2_G2" => Labeled::build(
            id,
            &["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("a", "d"),
                ("d", "c"),
                ("c", "e"),
                ("d", "b"),
                ("e", "g"),
                ("e", "f"),
                ("f", "g"),
            ],
        )?,
        "fig34_graph" => Labeled::build(
            id,
            &["a", "b", "c", "d", "e", "f", "g", "h"],
            &[
                ("h", "g"),
                ("g", "f"),
                ("f", "e"),
                ("a", "h"),
                ("b", "g"),
                ("c", "f"),
                ("f", "d"),
            ],
        )?,
        "fig4_graph" => Labeled::build(
            id,
            &["a", "b", "c", "v3", "v4", "t2", "t3"],
            &[
                ("a", "b"),
                ("b", "v3"),
                ("v3", "v4"),
                ("b", "c"),
                ("v3", "t2"),
                ("v4", "t3"),
                ("v3", "t3"),
                ("t2", "v4"),
                ("t2", "t3"),
            ],
        )?,
        "fig3_graph" => Labeled::build(
            id,
            &["v1", "v2", "v3", "v4", "t1", "t2"],
            &[
                ("v1", "v2"),
                ("v2", "v3"),
                ("v3", "v4"),
                ("v3", "t1"),
                ("v4", "t2"),
                ("v3", "t2"),
                ("t1", "v4"),
            ],
        )?,
        // Bottom row x1 u1 u2 x2, middle w1 w2, apex t; {u1,u2,w1,w2,t} is a K5.
        "fig56_graph" => Labeled::build(
            id,
            &["x1", "u1", "u2", "x2", "w1", "w2", "t"],
            &[
                ("x1", "u1"),
                ("u1", "u2"),
                ("u2", "x2"),
                ("u1", "w1"),
                ("u2", "w2"),
                ("w1", "w2"),
                ("w1", "t"),
                ("u1", "w2"),
                ("u1", "t"),
                ("u2", "w1"),
                ("u2", "t"),
                ("w2", "t"),
            ],
        )?,
        // a1, a2 hang off p; q follows p on the bottom row and joins the K5 {u1,u2,w1,w2,t}.
        "fig57_graph" => Labeled::build(
            id,
            &["a1", "a2", "p", "q", "u1", "u2", "w1", "w2", "t"],
            &[
                ("p", "q"),
                ("q", "u1"),
                ("u1", "u2"),
                ("p", "a1"),
                ("p", "a2"),
                ("q", "w1"),
                ("q", "w2"),
                ("u1", "w1"),
                ("u2", "w2"),
                ("w1", "w2"),
                ("w1", "t"),
                ("u1", "w2"),
                ("u1", "t"),
                ("u2", "w1"),
                ("u2", "t"),
                ("w2", "t"),
            ],
        )?,
        _ => return Err(Error::UnknownFamily(id.to_string())),
    };
    admit(id, &g)?;
    Ok(g)
}

fn admit(id: &str, lg: &Labeled) -> Result<()> {
    let g = &lg.graph;
    let n = g.order();
    let alpha = stability_number(g);
    let c = core(g);
    let nc = g.neighborhood_of(c).len();
    let mu = matching_edges(&maximum_matching(g)).len();
    let qr = is_quasi_regularizable_fast(g);
    let checks: Vec<(&str, bool)> = match id {
        "fig1_diamond" => vec![("xi = 2", c.len() == 2), ("quasi-regularizable", qr)],
        "fig1_K3_plus_e" => vec![("xi = 1", c.len() == 1)],
        "fig2_G1" => vec![("core = {a,b}", c == lg.set(&["a", "b"])), ("not qr", !qr)],
        "fig2_G2" => vec![
            ("core = {a,b,c}", c == lg.set(&["a", "b", "c"])),
            ("not qr", !qr),
        ],
        "fig34_graph" => {
            let s = lg.set(&["a", "b", "c", "d", "e"]);
            let a = lg.set(&["b", "c", "d"]);
            let lhs = s.difference(a).len();
            let rhs = g.neighborhood_of(s).difference(g.neighborhood_of(a)).len();
            vec![
                ("S maximum stable", g.is_stable(s) && s.len() == alpha),
                ("|S-A| = 2 > |N(S)-N(A)| = 1", lhs == 2 && rhs == 1),
            ]
        }
        "fig4_graph" => vec![
            ("xi = 2 > |N(core)| = 1", c.len() == 2 && nc == 1),
            ("alpha < n/2", 2 * alpha < n),
        ],
        "fig3_graph" => vec![
            ("alpha = 3 = n/2", alpha == 3 && n == 6),
            ("xi = 2", c.len() == 2),
            ("perfect matching", 2 * mu == n),
            ("KE", alpha + mu == n),
        ],
        "fig56_graph" => vec![("quasi-regularizable", qr), ("no perfect matching", 2 * mu < n)],
        "fig57_graph" => vec![
            ("not quasi-regularizable", !qr),
            ("|core| = 3 <= |N(core)| = 4", c.len() == 3 && nc == 4),
        ],
        _ => vec![],
    };
    match checks.iter().find(|(_, ok)| !ok) {
        Some((what, _)) => Err(Error::param(id, format!("reconstruction fails `{what}`"))),
        None => Ok(()),
    }
}

fn seq(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}_{i}")).collect()
}

fn edge(a: impl Into<String>, b: impl Into<String>) -> (String, String) {
    (a.into(), b.into())
}

/// Clique `b_1..b_p`, pendants `a_i b_i`, and `c_1..c_r` adjacent only to `b_p`.
///
/// Has `n = 2p + r`, `α = p + r` and `ξ = r + 1`.
pub fn fig45(p: usize, r: usize) -> Result<Labeled> {
    if p < 1 || r < 1 {
        return Err(Error::param("fig45", "requires p >= 1 and r >= 1"));
    }
    let mut labels = seq("a", 1..=p);
    labels.extend(seq("b", 1..=p));
    labels.extend(seq("c", 1..=r));
    let mut edges = Vec::new();
    for i in 1..=p {
        edges.push(edge(format!("a_{i}"), format!("b_{i}")));
        for j in i + 1..=p {
            edges.push(edge(format!("b_{i}"), format!("b_{j}")));
        }
    }
    for i in 1..=r {
        edges.push(edge(format!("b_{p}"), format!("c_{i}")));
    }
    Labeled::from_owned("fig45", labels, &edges)
}

/// Path `b_1..b_p`, pendants `a_i b_i`, and edges `b_p c_1`, `c_1 c_2`, `c_1 a_p`.
///
/// A König–Egerváry graph of order `2p + 2` with `core = {c_2}`; only `p` for
/// which those properties hold are admitted.
pub fn fig77(p: usize) -> Result<Labeled> {
    let g = fig77_base(p, false)?;
    let c = core(&g.graph);
    if !(is_koenig_egervary(&g.graph) && c == g.set(&["c_2"]) && g.graph.order() == 2 * p + 2) {
        return Err(Error::param("fig77", format!("p = {p} fails its stated properties")));
    }
    Ok(g)
}

/// [`fig77`] plus `c_3` adjacent to `a_1` and `b_1`: odd order `2p + 3`, `core = {c_2}`.
pub fn fig77_odd(p: usize) -> Result<Labeled> {
    let g = fig77_base(p, true)?;
    if !(core(&g.graph) == g.set(&["c_2"]) && g.graph.order() == 2 * p + 3) {
        return Err(Error::param("fig77_odd", format!("p = {p} fails its stated properties")));
    }
    Ok(g)
}

fn fig77_base(p: usize, odd: bool) -> Result<Labeled> {
    let family = if odd { "fig77_odd" } else { "fig77" };
    if p < 1 {
        return Err(Error::param(family, "requires p >= 1"));
    }
    let mut labels = seq("a", 1..=p);
    labels.extend(seq("b", 1..=p));
    labels.extend(seq("c", 1..=if odd { 3 } else { 2 }));
    let mut edges = Vec::new();
    for i in 1..=p {
        edges.push(edge(format!("a_{i}"), format!("b_{i}")));
        if i < p {
            edges.push(edge(format!("b_{i}"), format!("b_{}", i + 1)));
        }
    }
    edges.push(edge(format!("b_{p}"), "c_1"));
    edges.push(edge("c_1", "c_2"));
    edges.push(edge("c_1", format!("a_{p}")));
    if odd {
        edges.push(edge("c_3", "a_1"));
        edges.push(edge("c_3", "b_1"));
    }
    Labeled::from_owned(family, labels, &edges)
}

/// `x_1..x_k` each adjacent to `y_1`, and `y_1..y_p` a clique.
///
/// For `p >= k + 3` this has `ξ = k` while `α < n/2`.
pub fn remark_family(k: usize, p: usize) -> Result<Labeled> {
    if k < 1 || p < 1 {
        return Err(Error::param("remark_family", "requires k >= 1 and p >= 1"));
    }
    let mut labels = seq("x", 1..=k);
    labels.extend(seq("y", 1..=p));
    let mut edges: Vec<_> = (1..=k).map(|i| edge(format!("x_{i}"), "y_1")).collect();
    for i in 1..=p {
        for j in i + 1..=p {
            edges.push(edge(format!("y_{i}"), format!("y_{j}")));
        }
    }
    Labeled::from_owned("remark_family", labels, &edges)
}

/// `P_n`, `n >= 1`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("path", "requires n >= 1"));
    }
    let e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &e)
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("cycle", "requires n >= 3"));
    }
    let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    e.push((0, n - 1));
    Graph::from_edges(n, &e)
}

/// `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("complete", "requires n >= 1"));
    }
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            g.add_edge_mut(u, v)?;
        }
    }
    Ok(g)
}

/// `K_1 ∪ K_n`; the isolated vertex is 0.
pub fn k1_union_complete(n: usize) -> Result<Graph> {
    Graph::empty(1)?.disjoint_union(&complete(n)?)
}

/// `K_1 ∪ C_4`; the isolated vertex is 0.
pub fn k1_union_c4() -> Result<Graph> {
    Graph::empty(1)?.disjoint_union(&cycle(4)?)
}

/// Standard families by name: `path`, `cycle`, `complete`, `k1_union_complete`, `k1_union_c4`.
pub fn standard(id: &str, n: usize) -> Result<Graph> {
    match id {
        "path" => path(n),
        "cycle" => cycle(n),
        "complete" => complete(n),
        "k1_union_complete" => k1_union_complete(n),
        "k1_union_c4" => k1_union_c4(),
        _ => Err(Error::UnknownFamily(id.to_string())),
    }
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in edge-mask order.
///
/// Bit `i` of the mask is the `i`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > LABELED_CAP {
        return Err(Error::param(
            "enumerate_labeled",
            format!("n = {n} exceeds the cap {LABELED_CAP}"),
        ));
    }
    let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.end
    }

    /// The graph with a given edge mask.
    pub fn graph(&self, mask: u64) -> Graph {
        let mut g = Graph::empty(self.n).expect("n within cap");
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge_mut(u, v).expect("valid pair");
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Reproducible `G(n, p)` samples.
///
/// The generator is ChaCha8 seeded with `seed` through `SeedableRng::seed_from_u64`;
/// `stream` selects an independent ChaCha stream. For each graph, pairs are
/// visited in graph6 order and one `u64` is drawn per pair; the edge is
/// present when `(x >> 11) * 2^-53 < p`.
pub struct GnpSampler {
    n: usize,
    p: f64,
    rng: ChaCha8Rng,
    remaining: usize,
}

pub fn sample_gnp(n: usize, p: f64, seed: u64, count: usize) -> Result<GnpSampler> {
    sample_gnp_stream(n, p, seed, 0, count)
}

pub fn sample_gnp_stream(n: usize, p: f64, seed: u64, stream: u64, count: usize) -> Result<GnpSampler> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param("gnp", format!("edge probability {p} outside [0, 1]")));
    }
    Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    Ok(GnpSampler {
        n,
        p,
        rng,
        remaining: count,
    })
}

impl Iterator for GnpSampler {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut g = Graph::empty(self.n).expect("checked");
        for v in 1..self.n {
            for u in 0..v {
                let x = self.rng.next_u64();
                if ((x >> 11) as f64) * f64::powi(2.0, -53) < self.p {
                    g.add_edge_mut(u, v).expect("valid pair");
                }
            }
        }
        Some(g)
    }
}
