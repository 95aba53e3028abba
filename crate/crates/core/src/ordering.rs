//! Vertex orderings that steer the backtracking search.
//!
//! The degree-driven orderings repeatedly extract the alive vertex with the
//! smallest key (ties by ascending id) and update its neighbors, so vertices
//! unlikely to sit in a fair clique come first. Restricting an ordering of a
//! masked graph to one connected component gives the same sequence as running
//! it on that component alone, which lets the pipeline compute one ordering
//! per pruning pass.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{AttributedGraph, Graph, VertexId, VertexMask};
use crate::pruning::{ColorfulDegreeState, FairnessState, GroupState, NeighborTable, PeelState};

pub const UNRANKED: u32 = u32::MAX;

/// A rank for each vertex of a masked vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<VertexId>,
    rank: Vec<u32>,
}

impl VertexOrdering {
    fn from_order(n: usize, order: Vec<VertexId>) -> Self {
        let mut rank = vec![UNRANKED; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        VertexOrdering { order, rank }
    }

    /// Rank of `v`, or [`UNRANKED`] if `v` was not ordered.
    #[inline]
    pub fn rank(&self, v: VertexId) -> u32 {
        self.rank[v as usize]
    }

    /// Vertices by ascending rank.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Sorts `vertices` by ascending rank.
    pub fn sort_by_rank(&self, vertices: &mut [VertexId]) {
        vertices.sort_unstable_by_key(|&v| self.rank(v));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum OrderingKind {
    ColorOd,
    FairOd,
    HeurOd,
    Bfs,
    Vid,
    /// ColorOD for weak and relative search, FairOD (two attributes) or
    /// HeurOD for strong search.
    #[default]
    Auto,
}

impl OrderingKind {
    pub const CONCRETE: [OrderingKind; 5] = [
        OrderingKind::ColorOd,
        OrderingKind::FairOd,
        OrderingKind::HeurOd,
        OrderingKind::Bfs,
        OrderingKind::Vid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OrderingKind::ColorOd => "colorod",
            OrderingKind::FairOd => "fairod",
            OrderingKind::HeurOd => "heurod",
            OrderingKind::Bfs => "bfs",
            OrderingKind::Vid => "vid",
            OrderingKind::Auto => "auto",
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "colorod" => OrderingKind::ColorOd,
            "fairod" => OrderingKind::FairOd,
            "heurod" => OrderingKind::HeurOd,
            "bfs" => OrderingKind::Bfs,
            "vid" => OrderingKind::Vid,
            "auto" => OrderingKind::Auto,
            other => return Err(Error::InvalidParameter(format!("unknown ordering `{other}`"))),
        })
    }
}

fn peel_order<S: PeelState>(graph: &AttributedGraph, state: &mut S, mask: &VertexMask) -> VertexOrdering {
    let mut alive = mask.clone();
    let mut keys = vec![0usize; graph.n()];
    let mut heap = BTreeSet::new();
    for v in mask.iter() {
        keys[v as usize] = state.key(v);
        heap.insert((keys[v as usize], v));
    }
    let mut order = Vec::with_capacity(mask.count());
    let mut touched = Vec::new();
    while let Some((_, u)) = heap.pop_first() {
        order.push(u);
        alive.remove(u);
        touched.clear();
        state.remove(graph, u, alive.as_slice(), &mut touched);
        for &v in &touched {
            let new_key = state.key(v);
            let old_key = keys[v as usize];
            if new_key != old_key && heap.remove(&(old_key, v)) {
                keys[v as usize] = new_key;
                heap.insert((new_key, v));
            }
        }
    }
    VertexOrdering::from_order(graph.n(), order)
}

/// ColorOD: iterative removal of the vertex with the smallest `D_min`.
pub fn color_od(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> VertexOrdering {
    let mut state = ColorfulDegreeState::new(graph, coloring, mask);
    peel_order(graph, &mut state, mask)
}

/// FairOD: iterative removal of the vertex with the smallest fairness degree.
pub fn fair_od(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Result<VertexOrdering> {
    if graph.num_attrs() != 2 {
        return Err(Error::RequiresTwoAttributes {
            what: "FairOD",
            found: graph.num_attrs(),
        });
    }
    let mut state = FairnessState(GroupState::new(graph, coloring, mask));
    Ok(peel_order(graph, &mut state, mask))
}

/// Greedy approximation of the fairness degree: every color group is handed
/// to the attribute (among those present in the group) with the fewest groups
/// so far, ties to the smallest attribute index; the result is the smallest
/// per-attribute tally.
pub fn greedy_group_degree(row: &[u32], num_attrs: usize) -> usize {
    let mut cnt = vec![0usize; num_attrs];
    for group in row.chunks_exact(num_attrs) {
        let pick = group
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .min_by_key(|&(a, _)| (cnt[a], a))
            .map(|(a, _)| a);
        if let Some(a) = pick {
            cnt[a] += 1;
        }
    }
    cnt.into_iter().min().unwrap_or(0)
}

struct HeuristicState {
    table: NeighborTable,
    coloring: Coloring,
    gd: Vec<usize>,
}

impl HeuristicState {
    fn new(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Self {
        let table = NeighborTable::build(graph, coloring, mask);
        let mut gd = vec![0; graph.n()];
        for v in mask.iter() {
            gd[v as usize] = greedy_group_degree(table.row(v), graph.num_attrs());
        }
        HeuristicState {
            table,
            coloring: coloring.clone(),
            gd,
        }
    }
}

impl PeelState for HeuristicState {
    fn key(&self, v: VertexId) -> usize {
        self.gd[v as usize]
    }

    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>) {
        let (cu, au) = (self.coloring.color(u), graph.attr(u));
        for &v in graph.neighbors(u) {
            if alive[v as usize] {
                self.table.decrement(v, cu, au);
                self.gd[v as usize] = greedy_group_degree(self.table.row(v), graph.num_attrs());
                touched.push(v);
            }
        }
    }
}

/// HeurOD: iterative removal of the vertex with the smallest greedy group degree.
pub fn heur_od(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> VertexOrdering {
    let mut state = HeuristicState::new(graph, coloring, mask);
    peel_order(graph, &mut state, mask)
}

/// Breadth-first order; each component starts from its smallest vertex and
/// neighbors are visited in ascending id.
pub fn bfs_od(graph: &Graph, mask: &VertexMask) -> VertexOrdering {
    let mut seen = vec![false; graph.n()];
    let mut order = Vec::with_capacity(mask.count());
    let mut queue = VecDeque::new();
    for s in mask.iter() {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in graph.neighbors(u) {
                if mask.contains(v) && !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    VertexOrdering::from_order(graph.n(), order)
}

/// Ascending vertex id.
pub fn vid_od(graph: &Graph, mask: &VertexMask) -> VertexOrdering {
    VertexOrdering::from_order(graph.n(), mask.iter().collect())
}

/// Computes a concrete ordering over `mask`.
pub fn compute_ordering(
    graph: &AttributedGraph,
    coloring: &Coloring,
    mask: &VertexMask,
    kind: OrderingKind,
) -> Result<VertexOrdering> {
    match kind {
        OrderingKind::ColorOd => Ok(color_od(graph, coloring, mask)),
        OrderingKind::FairOd => fair_od(graph, coloring, mask),
        OrderingKind::HeurOd => Ok(heur_od(graph, coloring, mask)),
        OrderingKind::Bfs => Ok(bfs_od(graph, mask)),
        OrderingKind::Vid => Ok(vid_od(graph, mask)),
        OrderingKind::Auto => Err(Error::InvalidParameter("ordering must be resolved before use".into())),
    }
}
