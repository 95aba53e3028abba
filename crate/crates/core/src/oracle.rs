//! Brute-force reference enumerators.
//!
//! These are the straightforward baselines: list maximal (or all) cliques and
//! filter by the attribute constraints. They are only practical on small
//! graphs and exist to cross-check the pruned enumerators.

use crate::cliques::CliqueSet;
use crate::enumerate::Model;
use crate::graph::{AttributedGraph, Clique, Graph, VertexId, VertexMask};

fn intersect(sorted: &[VertexId], neighbors: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(sorted.len().min(neighbors.len()));
    let (mut i, mut j) = (0, 0);
    while i < sorted.len() && j < neighbors.len() {
        match sorted[i].cmp(&neighbors[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(sorted[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn count_common(sorted: &[VertexId], neighbors: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < sorted.len() && j < neighbors.len() {
        match sorted[i].cmp(&neighbors[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn bk_pivot(graph: &Graph, r: &mut Vec<VertexId>, p: Vec<VertexId>, x: Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximizing |P ∩ N(pivot)|, smallest id on ties
    let mut pivot = VertexId::MAX;
    let mut best = 0;
    for &u in p.iter().chain(x.iter()) {
        let c = count_common(&p, graph.neighbors(u));
        if pivot == VertexId::MAX || c > best || (c == best && u < pivot) {
            pivot = u;
            best = c;
        }
    }
    let skip = graph.neighbors(pivot);
    let branch: Vec<VertexId> = p.iter().copied().filter(|v| skip.binary_search(v).is_err()).collect();
    let mut p = p;
    let mut x = x;
    for v in branch {
        let nv = graph.neighbors(v);
        r.push(v);
        bk_pivot(graph, r, intersect(&p, nv), intersect(&x, nv), out);
        r.pop();
        p.retain(|&w| w != v);
        let pos = x.binary_search(&v).unwrap_or_else(|e| e);
        x.insert(pos, v);
    }
}

/// All maximal cliques of the subgraph induced by `mask` (Bron–Kerbosch with
/// Tomita pivoting).
pub fn bk_pivot_maximal_cliques(graph: &AttributedGraph, mask: &VertexMask) -> CliqueSet {
    let mut raw = Vec::new();
    let p: Vec<VertexId> = mask.iter().collect();
    if !p.is_empty() {
        let local = masked(graph, mask);
        bk_pivot(&local, &mut Vec::new(), p, Vec::new(), &mut raw);
    }
    raw.into_iter().map(|c| Clique::new(graph, c)).collect()
}

fn masked(graph: &Graph, mask: &VertexMask) -> Graph {
    if mask.count() == graph.n() {
        return graph.clone();
    }
    Graph::from_dense_edges(
        graph.n(),
        graph.edges().filter(|&(u, v)| mask.contains(u) && mask.contains(v)),
    )
}

/// Visits every clique (not only maximal ones) with at least `min_size`
/// vertices. Each clique is produced once, as an increasing id sequence.
pub fn for_each_clique(graph: &Graph, min_size: usize, mut visit: impl FnMut(&[VertexId])) {
    fn grow(
        graph: &Graph,
        r: &mut Vec<VertexId>,
        cand: &[VertexId],
        min_size: usize,
        visit: &mut dyn FnMut(&[VertexId]),
    ) {
        if r.len() + cand.len() < min_size {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            r.push(v);
            if r.len() >= min_size {
                visit(r);
            }
            let next = intersect(&cand[i + 1..], graph.neighbors(v));
            grow(graph, r, &next, min_size, visit);
            r.pop();
        }
    }
    let all: Vec<VertexId> = graph.vertices().collect();
    grow(graph, &mut Vec::new(), &all, min_size.max(1), &mut visit);
}

/// Weak fair cliques: maximal cliques with at least `k` vertices of every attribute.
pub fn base_weak(graph: &AttributedGraph, k: usize) -> CliqueSet {
    bk_pivot_maximal_cliques(graph, &VertexMask::full(graph.n()))
        .iter()
        .filter(|c| c.attr_counts().iter().all(|&x| x >= k))
        .cloned()
        .collect()
}

/// Keeps the cliques that are not a proper subset of another kept clique.
fn maximal_only(mut kept: Vec<Clique>) -> CliqueSet {
    kept.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut result: Vec<Clique> = Vec::new();
    for c in kept {
        if !result.iter().any(|big| big.len() > c.len() && c.is_subset_of(big)) {
            result.push(c);
        }
    }
    result.into_iter().collect()
}

fn constrained_maximal(graph: &AttributedGraph, k: usize, ok: impl Fn(&[usize]) -> bool) -> CliqueSet {
    let min_size = k * graph.num_attrs();
    let mut kept = Vec::new();
    for_each_clique(graph, min_size, |vs| {
        let counts = graph.attr_counts(vs);
        if counts.iter().all(|&x| x >= k) && ok(&counts) {
            kept.push(Clique::new(graph, vs.to_vec()));
        }
    });
    maximal_only(kept)
}

/// Strong fair cliques: equal attribute counts of at least `k`, maximal among
/// such cliques.
pub fn base_strong(graph: &AttributedGraph, k: usize) -> CliqueSet {
    constrained_maximal(graph, k, |c| c.iter().all(|&x| x == c[0]))
}

/// Relative fair cliques: counts at least `k` and pairwise within `delta`
/// (`None` means unbounded), maximal among such cliques.
pub fn base_relative(graph: &AttributedGraph, k: usize, delta: Option<usize>) -> CliqueSet {
    constrained_maximal(graph, k, |c| match delta {
        None => true,
        Some(d) => c.iter().max().unwrap() - c.iter().min().unwrap() <= d,
    })
}

/// The baseline matching `model`.
pub fn baseline(graph: &AttributedGraph, model: Model, k: usize, delta: Option<usize>) -> CliqueSet {
    match model {
        Model::Weak => base_weak(graph, k),
        Model::Strong => base_strong(graph, k),
        Model::Relative => base_relative(graph, k, delta),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{fixture_f1, fixture_f2, gnp};
    use crate::graph::assign_random_attributes;

    fn ids(g: &AttributedGraph, set: &CliqueSet) -> Vec<Vec<u64>> {
        set.iter().map(|c| c.original_ids(g)).collect()
    }

    #[test]
    fn triangle_and_diamond() {
        let tri =
            AttributedGraph::from_labels(Graph::from_dense_edges(3, [(0, 1), (1, 2), (0, 2)]), &["a"; 3]).unwrap();
        assert_eq!(
            bk_pivot_maximal_cliques(&tri, &VertexMask::full(3)).vertex_sets(),
            vec![vec![0, 1, 2]]
        );
        let diamond = AttributedGraph::from_labels(
            Graph::from_dense_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            &["a"; 4],
        )
        .unwrap();
        assert_eq!(
            bk_pivot_maximal_cliques(&diamond, &VertexMask::full(4)).vertex_sets(),
            vec![vec![0, 1, 2], vec![0, 1, 3]]
        );
    }

    /// Subset enumeration over bitmasks.
    fn brute_maximal(g: &Graph) -> Vec<Vec<VertexId>> {
        let n = g.n();
        let adj: Vec<u32> = (0..n)
            .map(|u| g.neighbors(u as VertexId).iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut out = Vec::new();
        for s in 1u32..(1u32 << n) {
            let is_clique = (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .all(|v| (s & !(1 << v)) & !adj[v] == 0);
            if !is_clique {
                continue;
            }
            let extendable = (0..n).any(|w| s >> w & 1 == 0 && s & !adj[w] == 0);
            if !extendable {
                out.push((0..n as VertexId).filter(|&v| s >> v & 1 == 1).collect());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn bk_matches_subset_brute_force() {
        for seed in 0..8 {
            let g = gnp(16 + (seed as usize % 5), 0.5, seed);
            let ag = AttributedGraph::from_labels(g.clone(), &vec!["a"; g.n()]).unwrap();
            let bk = bk_pivot_maximal_cliques(&ag, &VertexMask::full(g.n())).vertex_sets();
            assert_eq!(bk, brute_maximal(&g), "seed {seed}");
        }
    }

    #[test]
    fn fixture_baselines() {
        let f1 = fixture_f1();
        assert_eq!(ids(&f1, &base_strong(&f1, 2)), vec![vec![1, 2, 3, 4, 5, 6]]);
        let f2 = fixture_f2();
        assert_eq!(ids(&f2, &base_weak(&f2, 3)), vec![vec![1, 2, 3, 4, 5, 6, 7]]);
        assert_eq!(base_weak(&f2, 0).len(), 1);
        let strong = ids(&f2, &base_strong(&f2, 3));
        assert_eq!(
            strong,
            vec![
                vec![1, 2, 3, 4, 5, 6],
                vec![1, 2, 4, 5, 6, 7],
                vec![1, 3, 4, 5, 6, 7],
                vec![2, 3, 4, 5, 6, 7],
            ]
        );
        assert!(base_strong(&f2, 4).is_empty());
        assert_eq!(
            ids(&f2, &base_relative(&f2, 3, Some(1))),
            vec![vec![1, 2, 3, 4, 5, 6, 7]]
        );
    }

    #[test]
    fn relative_degenerates() {
        for seed in 0..20 {
            let g = assign_random_attributes(gnp(14, 0.5, seed), 2, seed).unwrap();
            for k in 1..=2 {
                assert_eq!(base_relative(&g, k, Some(0)), base_strong(&g, k));
                assert_eq!(base_relative(&g, k, Some(g.n())), base_weak(&g, k));
                assert_eq!(base_relative(&g, k, None), base_weak(&g, k));
            }
        }
    }
}
