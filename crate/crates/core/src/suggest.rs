//! Picking a sensible `k`.
//!
//! No fair clique can have more than `C_max` vertices, where `C_max` is the
//! maximum clique size, so `k <= C_max / A_n`. `C_max` is bracketed between a
//! greedy clique and the number of colors of a proper coloring.

use serde::Serialize;

use crate::coloring::greedy_color;
use crate::graph::{AttributedGraph, Graph, VertexId, VertexMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KSuggestion {
    pub clique_lower_bound: usize,
    pub color_upper_bound: usize,
    pub num_attrs: usize,
    /// Largest `k` for which a clique of known size could still be fair.
    pub k_max: usize,
    /// No `k` above this can produce any result.
    pub k_cap: usize,
}

/// Grows a clique from `seed`, each time adding the candidate with the most
/// neighbors among the remaining candidates (smallest id on ties).
pub fn greedy_clique(graph: &Graph, seed: VertexId) -> Vec<VertexId> {
    let mut clique = vec![seed];
    let mut cand: Vec<VertexId> = graph.neighbors(seed).to_vec();
    while !cand.is_empty() {
        let inside = |u: VertexId| cand.iter().filter(|&&w| graph.has_edge(u, w)).count();
        let best = *cand.iter().max_by_key(|&&u| (inside(u), std::cmp::Reverse(u))).unwrap();
        clique.push(best);
        cand.retain(|&w| w != best && graph.has_edge(best, w));
    }
    clique.sort_unstable();
    clique
}

/// Bounds on `k` from greedy cliques grown out of the `seeds` highest-degree
/// vertices.
pub fn suggest_k(graph: &AttributedGraph, seeds: usize) -> KSuggestion {
    let mut by_degree: Vec<VertexId> = graph.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let lower = by_degree
        .iter()
        .take(seeds.max(1))
        .map(|&v| greedy_clique(graph, v).len())
        .max()
        .unwrap_or(0);
    let colors = greedy_color(graph, &VertexMask::full(graph.n())).num_colors();
    let a_n = graph.num_attrs();
    KSuggestion {
        clique_lower_bound: lower,
        color_upper_bound: colors,
        num_attrs: a_n,
        k_max: lower / a_n,
        k_cap: colors / a_n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{fixture_f1, gnp};
    use crate::graph::assign_random_attributes;
    use crate::oracle::bk_pivot_maximal_cliques;

    #[test]
    fn complete_graphs() {
        let s = suggest_k(&fixture_f1(), 8);
        assert_eq!((s.clique_lower_bound, s.k_max, s.k_cap), (6, 3, 3));
        let tri = AttributedGraph::from_labels(Graph::from_dense_edges(3, [(0, 1), (1, 2), (0, 2)]), &["a", "b", "c"])
            .unwrap();
        assert_eq!(suggest_k(&tri, 3).k_cap, 1);
    }

    #[test]
    fn bounds_bracket_maximum_clique() {
        for seed in 0..15 {
            let g = assign_random_attributes(gnp(25, 0.4, seed), 2, seed).unwrap();
            let max = bk_pivot_maximal_cliques(&g, &VertexMask::full(g.n()))
                .iter()
                .map(|c| c.len())
                .max()
                .unwrap();
            let s = suggest_k(&g, 5);
            assert!(s.clique_lower_bound <= max && max <= s.color_upper_bound, "seed {seed}");
        }
    }
}
