//! Seeded random graphs and small named fixtures.
//!
//! All randomness goes through ChaCha8 seeded with `seed_from_u64`, so a seed
//! reproduces the same graph on every platform.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{AttributedGraph, Graph, VertexId};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_dense_edges(n, edges)
}

/// Uniform random graph with exactly `m` distinct edges (capped at `n(n-1)/2`).
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = n * n.saturating_sub(1) / 2;
    let m = m.min(total);
    if total <= 4 * m {
        // dense: sample pair indices directly
        let picked = sample(&mut rng, total, m);
        let mut edges = Vec::with_capacity(m);
        for idx in picked.iter() {
            edges.push(pair_from_index(n, idx));
        }
        return Graph::from_dense_edges(n, edges);
    }
    let mut seen = std::collections::HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n as VertexId);
        let v = rng.gen_range(0..n as VertexId);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_dense_edges(n, edges)
}

fn pair_from_index(n: usize, mut idx: usize) -> (VertexId, VertexId) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if idx < row {
            return (u as VertexId, (u + 1 + idx) as VertexId);
        }
        idx -= row;
        u += 1;
    }
}

/// Clique over original ids `1..=size` plus `extra` edges; `labels[i]` is the
/// label of original id `i + 1`.
fn labelled_clique(labels: &[&str], size: u64, extra: &[(u64, u64)]) -> AttributedGraph {
    let n = size;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    edges.extend_from_slice(extra);
    let graph = Graph::from_original_edges(edges);
    let by_dense: Vec<&str> = graph.original_ids().iter().map(|&o| labels[o as usize - 1]).collect();
    AttributedGraph::from_labels(graph, &by_dense).expect("fixture labels are valid")
}

/// `K6` on `v1..v6` with attributes `a a a b b b`.
pub fn fixture_f1() -> AttributedGraph {
    labelled_clique(&["a", "a", "a", "b", "b", "b"], 6, &[])
}

/// `K7` on `v1..v7` with attributes `a a a b b b a`.
pub fn fixture_f2() -> AttributedGraph {
    labelled_clique(&["a", "a", "a", "b", "b", "b", "a"], 7, &[])
}

/// `F2` plus `v8` (attribute `a`) adjacent only to `v1` and `v7`.
pub fn fixture_f3() -> AttributedGraph {
    labelled_clique(&["a", "a", "a", "b", "b", "b", "a", "a"], 7, &[(1, 8), (7, 8)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnm_has_requested_edges() {
        let g = gnm(50, 200, 1);
        assert_eq!(g.m(), 200);
        let dense = gnm(6, 15, 1);
        assert_eq!(dense.m(), 15);
        assert_eq!(gnm(6, 100, 2).m(), 15);
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(30, 0.3, 9), gnp(30, 0.3, 9));
        assert_eq!(gnp(10, 1.0, 0).m(), 45);
    }

    #[test]
    fn fixtures() {
        let f2 = fixture_f2();
        assert_eq!((f2.n(), f2.m()), (7, 21));
        let counts = f2.attr_counts(&f2.vertices().collect::<Vec<_>>());
        assert_eq!(counts, vec![4, 3]);
        let f3 = fixture_f3();
        assert_eq!((f3.n(), f3.m()), (8, 23));
        let v8 = f3.dense_id_of(8).unwrap();
        assert_eq!(f3.degree(v8), 2);
    }
}
