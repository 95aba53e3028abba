use std::collections::HashMap;

use crate::graph::{AttributedGraph, VertexId};
use crate::ordering::VertexOrdering;

/// One connected component relabelled by search rank: local id `i` is the
/// vertex of rank `i`, so "higher rank" is simply "larger local id".
#[derive(Debug, Clone)]
pub struct ComponentView {
    global: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
    attr: Vec<u32>,
    num_attrs: usize,
}

impl ComponentView {
    pub fn new(graph: &AttributedGraph, component: &[VertexId], ordering: &VertexOrdering) -> Self {
        let mut global = component.to_vec();
        ordering.sort_by_rank(&mut global);
        let local: HashMap<VertexId, u32> = global.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let adj = global
            .iter()
            .map(|&v| {
                let mut list: Vec<u32> = graph
                    .neighbors(v)
                    .iter()
                    .filter_map(|w| local.get(w).copied())
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let attr = global.iter().map(|&v| graph.attr(v)).collect();
        ComponentView {
            global,
            adj,
            attr,
            num_attrs: graph.num_attrs(),
        }
    }

    pub fn len(&self) -> usize {
        self.global.len()
    }

    pub fn is_empty(&self) -> bool {
        self.global.is_empty()
    }

    /// Original graph ids in rank order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.global
    }

    pub(crate) fn num_attrs(&self) -> usize {
        self.num_attrs
    }

    #[inline]
    pub(crate) fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    #[inline]
    pub(crate) fn attr(&self, v: u32) -> usize {
        self.attr[v as usize] as usize
    }

    #[inline]
    pub(crate) fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub(crate) fn to_global(&self, local: &[u32]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = local.iter().map(|&v| self.global[v as usize]).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn counts(&self, vs: &[u32]) -> Vec<usize> {
        let mut c = vec![0; self.num_attrs];
        for &v in vs {
            c[self.attr(v)] += 1;
        }
        c
    }

    /// Common neighbors of a nonempty set.
    pub(crate) fn common_neighbors(&self, vs: &[u32]) -> Vec<u32> {
        let Some((&first, rest)) = vs.split_first() else {
            return (0..self.len() as u32).collect();
        };
        let mut common = self.neighbors(first).to_vec();
        for &v in rest {
            common = intersect(&common, self.neighbors(v));
        }
        common
    }
}

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Merges two sorted disjoint lists.
pub(crate) fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Adding `u` of attribute `a` to the current clique: candidates keep the
/// common neighbors of `u` except same-attribute vertices of lower rank, which
/// move to the excluded set together with the excluded common neighbors.
pub(crate) fn descend(view: &ComponentView, u: u32, cand: &[u32], excluded: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let a = view.attr(u);
    let common = intersect(cand, view.neighbors(u));
    let mut next_cand = Vec::with_capacity(common.len());
    let mut demoted = Vec::new();
    for v in common {
        if view.attr(v) == a && v < u {
            demoted.push(v);
        } else {
            next_cand.push(v);
        }
    }
    let next_excl = merge(&intersect(excluded, view.neighbors(u)), &demoted);
    (next_cand, next_excl)
}
