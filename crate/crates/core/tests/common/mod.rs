//! Brute-force reference implementations. They read only the edge list of a
//! graph and share no code with the library algorithms.
#![allow(dead_code)]

use stablecore::{Graph, VertexSet};

/// Adjacency masks rebuilt from the edge list.
pub fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn is_stable(adj: &[u64], s: u64) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

fn nbhd(adj: &[u64], s: u64) -> u64 {
    (0..adj.len())
        .filter(|&v| s >> v & 1 == 1)
        .fold(0, |acc, v| acc | adj[v])
}

/// Every stable subset, as bitmasks, by scanning all `2^n` subsets.
pub fn stable_sets(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    (0u64..1 << g.order()).filter(|&s| is_stable(&adj, s)).collect()
}

pub fn alpha(g: &Graph) -> usize {
    stable_sets(g)
        .into_iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn omega(g: &Graph) -> Vec<u64> {
    let all = stable_sets(g);
    let a = all.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    all.into_iter().filter(|s| s.count_ones() == a).collect()
}

/// Intersection of all maximum stable sets.
pub fn core(g: &Graph) -> VertexSet {
    let full = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    VertexSet::from_bits(omega(g).into_iter().fold(full, |acc, s| acc & s))
}

/// `μ(G)` by dynamic programming over vertex subsets: the lowest vertex is
/// either unmatched or matched to a neighbor.
pub fn mu(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.order();
    let mut memo = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = memo[rest];
        let mut cand = adj[v] as usize & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + memo[rest & !(1 << u)]);
        }
        memo[mask] = best;
    }
    memo[(1 << n) - 1] as usize
}

/// Every stable set `S` has `|S| <= |N(S)|`.
pub fn quasi_regularizable(g: &Graph) -> bool {
    let adj = adjacency(g);
    stable_sets(g)
        .into_iter()
        .all(|s| s.count_ones() <= nbhd(&adj, s).count_ones())
}

/// `α(G + e) = α(G)` for every non-edge, using the brute-force `α`.
pub fn alpha_plus(g: &Graph) -> bool {
    let a = alpha(g);
    g.non_edges()
        .all(|(u, v)| alpha(&g.with_edge(u, v).unwrap()) == a)
}

/// Hall's condition for matching `a` into `s`: every subset of `a` has at
/// least as many neighbors in `s`.
pub fn hall_into(g: &Graph, a: VertexSet, s: VertexSet) -> bool {
    let adj = adjacency(g);
    let members: Vec<usize> = a.iter().collect();
    (0u64..1 << members.len()).all(|pick| {
        let sub = members
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .fold(0u64, |acc, (_, &v)| acc | 1 << v);
        (nbhd(&adj, sub) & s.bits()).count_ones() >= sub.count_ones()
    })
}

pub fn isolated(g: &Graph) -> VertexSet {
    let adj = adjacency(g);
    (0..g.order()).filter(|&v| adj[v] == 0).collect()
}
