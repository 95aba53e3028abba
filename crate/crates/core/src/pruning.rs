//! Peeling cores that discard vertices which cannot belong to any fair clique.
//!
//! Three cores are provided, each the unique maximal vertex set in which every
//! vertex meets a degree-style threshold:
//!
//! * colorful k-core: every attribute is seen on at least `k` distinct
//!   neighbor colors (`D_min(u) >= k`);
//! * fairness k-core (two attributes): the largest balanced selection of
//!   neighbor color groups has size at least `2k`;
//! * enhanced colorful k-core (two attributes): after distributing mixed
//!   color groups, both attributes own at least `k` groups.
//!
//! Any fair clique with threshold `k` survives the corresponding core at
//! `k - 1`. All cores share one queue-driven peeling loop; the bookkeeping is
//! per-vertex counts of alive neighbors keyed by `(color, attribute)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{AttributedGraph, VertexId, VertexMask};

/// Counts of alive neighbors of every vertex, keyed by `(color, attribute)`.
#[derive(Debug, Clone)]
pub(crate) struct NeighborTable {
    num_colors: usize,
    num_attrs: usize,
    counts: Vec<u32>,
}

impl NeighborTable {
    pub(crate) fn build(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Self {
        let num_colors = coloring.num_colors();
        let num_attrs = graph.num_attrs();
        let mut counts = vec![0u32; graph.n() * num_colors * num_attrs];
        for u in mask.iter() {
            let base = u as usize * num_colors * num_attrs;
            for &v in graph.neighbors(u) {
                if mask.contains(v) {
                    let idx = base + coloring.color(v) as usize * num_attrs + graph.attr(v) as usize;
                    counts[idx] += 1;
                }
            }
        }
        NeighborTable {
            num_colors,
            num_attrs,
            counts,
        }
    }

    #[inline]
    fn index(&self, v: VertexId, color: u32, attr: u32) -> usize {
        (v as usize * self.num_colors + color as usize) * self.num_attrs + attr as usize
    }

    #[inline]
    pub(crate) fn get(&self, v: VertexId, color: u32, attr: u32) -> u32 {
        self.counts[self.index(v, color, attr)]
    }

    /// Decrements and returns the new count.
    #[inline]
    pub(crate) fn decrement(&mut self, v: VertexId, color: u32, attr: u32) -> u32 {
        let idx = self.index(v, color, attr);
        self.counts[idx] -= 1;
        self.counts[idx]
    }

    /// Per-color rows of `v`: `row[c * num_attrs + a]`.
    pub(crate) fn row(&self, v: VertexId) -> &[u32] {
        let width = self.num_colors * self.num_attrs;
        &self.counts[v as usize * width..(v as usize + 1) * width]
    }

    pub(crate) fn num_attrs(&self) -> usize {
        self.num_attrs
    }
}

/// Incremental state behind a peeling pass or a peeling order.
pub(crate) trait PeelState {
    fn key(&self, v: VertexId) -> usize;

    /// Drops `u` from the bookkeeping of its alive neighbors and reports the
    /// neighbors whose key may have changed.
    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>);
}

/// Colorful degrees `D_a(u)`: the number of distinct colors among `u`'s alive
/// neighbors with attribute `a`, plus their minimum over attributes.
#[derive(Debug, Clone)]
pub struct ColorfulDegreeState {
    table: NeighborTable,
    coloring: Coloring,
    degrees: Vec<u32>,
    d_min: Vec<u32>,
}

impl ColorfulDegreeState {
    pub fn new(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Self {
        let table = NeighborTable::build(graph, coloring, mask);
        let a_n = graph.num_attrs();
        let mut degrees = vec![0u32; graph.n() * a_n];
        let mut d_min = vec![0u32; graph.n()];
        for u in mask.iter() {
            let row = table.row(u);
            let d = &mut degrees[u as usize * a_n..(u as usize + 1) * a_n];
            for per_color in row.chunks_exact(a_n) {
                for (a, &count) in per_color.iter().enumerate() {
                    if count > 0 {
                        d[a] += 1;
                    }
                }
            }
            d_min[u as usize] = d.iter().copied().min().unwrap_or(0);
        }
        ColorfulDegreeState {
            table,
            coloring: coloring.clone(),
            degrees,
            d_min,
        }
    }

    pub fn degree(&self, v: VertexId, attr: u32) -> u32 {
        self.degrees[v as usize * self.table.num_attrs() + attr as usize]
    }

    pub fn d_min(&self, v: VertexId) -> u32 {
        self.d_min[v as usize]
    }
}

impl PeelState for ColorfulDegreeState {
    fn key(&self, v: VertexId) -> usize {
        self.d_min[v as usize] as usize
    }

    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>) {
        let (cu, au) = (self.coloring.color(u), graph.attr(u));
        let a_n = self.table.num_attrs();
        for &v in graph.neighbors(u) {
            if !alive[v as usize] {
                continue;
            }
            if self.table.decrement(v, cu, au) == 0 {
                let d = &mut self.degrees[v as usize * a_n..(v as usize + 1) * a_n];
                d[au as usize] -= 1;
                let new_min = d.iter().copied().min().unwrap_or(0);
                if new_min != self.d_min[v as usize] {
                    self.d_min[v as usize] = new_min;
                    touched.push(v);
                }
            }
        }
    }
}

/// Numbers of neighbor color groups holding only attribute 0 (`c1`), only
/// attribute 1 (`c2`), or both (`cm`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GroupCounts {
    pub c1: usize,
    pub c2: usize,
    pub cm: usize,
}

impl GroupCounts {
    pub fn new(c1: usize, c2: usize, cm: usize) -> Self {
        GroupCounts { c1, c2, cm }
    }

    fn slot(&mut self, has0: bool, has1: bool) -> Option<&mut usize> {
        match (has0, has1) {
            (true, false) => Some(&mut self.c1),
            (false, true) => Some(&mut self.c2),
            (true, true) => Some(&mut self.cm),
            (false, false) => None,
        }
    }
}

/// Fairness degree: the size of the largest selection of color groups (one
/// vertex per group) holding equally many vertices of both attributes.
pub fn fair_deg(g: GroupCounts) -> usize {
    let (lo, hi) = if g.c1 <= g.c2 { (g.c1, g.c2) } else { (g.c2, g.c1) };
    let gap = hi - lo;
    if g.cm >= gap {
        2 * ((g.cm - gap) / 2 + hi)
    } else {
        2 * (g.cm + lo)
    }
}

/// Enhanced colorful degree against threshold `k`: mixed groups top up the
/// side that is short of `k`, attribute 0 first, and the smaller side is
/// returned.
pub fn enhanced_col_deg(g: GroupCounts, k: usize) -> usize {
    let GroupCounts { mut c1, mut c2, mut cm } = g;
    let need1 = k.saturating_sub(c1);
    let moved = need1.min(cm);
    c1 += moved;
    cm -= moved;
    let need2 = k.saturating_sub(c2);
    c2 += need2.min(cm);
    c1.min(c2)
}

/// Per-vertex group categories for two-attribute graphs.
#[derive(Debug, Clone)]
pub(crate) struct GroupState {
    table: NeighborTable,
    coloring: Coloring,
    groups: Vec<GroupCounts>,
}

impl GroupState {
    pub(crate) fn new(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Self {
        debug_assert_eq!(graph.num_attrs(), 2);
        let table = NeighborTable::build(graph, coloring, mask);
        let mut groups = vec![GroupCounts::default(); graph.n()];
        for u in mask.iter() {
            let g = &mut groups[u as usize];
            for pair in table.row(u).chunks_exact(2) {
                if let Some(slot) = g.slot(pair[0] > 0, pair[1] > 0) {
                    *slot += 1;
                }
            }
        }
        GroupState {
            table,
            coloring: coloring.clone(),
            groups,
        }
    }

    pub(crate) fn groups(&self, v: VertexId) -> GroupCounts {
        self.groups[v as usize]
    }

    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>) {
        let (cu, au) = (self.coloring.color(u), graph.attr(u));
        for &v in graph.neighbors(u) {
            if !alive[v as usize] {
                continue;
            }
            let before = (self.table.get(v, cu, 0) > 0, self.table.get(v, cu, 1) > 0);
            self.table.decrement(v, cu, au);
            let after = (self.table.get(v, cu, 0) > 0, self.table.get(v, cu, 1) > 0);
            if before != after {
                let g = &mut self.groups[v as usize];
                if let Some(slot) = g.slot(before.0, before.1) {
                    *slot -= 1;
                }
                if let Some(slot) = g.slot(after.0, after.1) {
                    *slot += 1;
                }
                touched.push(v);
            }
        }
    }
}

/// Group state keyed by the fairness degree.
pub(crate) struct FairnessState(pub(crate) GroupState);

impl PeelState for FairnessState {
    fn key(&self, v: VertexId) -> usize {
        fair_deg(self.0.groups(v))
    }

    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>) {
        self.0.remove(graph, u, alive, touched);
    }
}

/// Group state keyed by the enhanced colorful degree at a fixed `k`.
pub(crate) struct EnhancedState {
    pub(crate) groups: GroupState,
    pub(crate) k: usize,
}

impl PeelState for EnhancedState {
    fn key(&self, v: VertexId) -> usize {
        enhanced_col_deg(self.groups.groups(v), self.k)
    }

    fn remove(&mut self, graph: &AttributedGraph, u: VertexId, alive: &[bool], touched: &mut Vec<VertexId>) {
        self.groups.remove(graph, u, alive, touched);
    }
}

/// FIFO peeling: drops every alive vertex whose key is below `threshold`
/// until none remains.
fn peel<S: PeelState>(graph: &AttributedGraph, state: &mut S, mask: &mut VertexMask, threshold: usize) {
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    let initial: Vec<VertexId> = mask.iter().filter(|&v| state.key(v) < threshold).collect();
    for v in initial {
        mask.remove(v);
        queue.push_back(v);
    }
    let mut touched = Vec::new();
    while let Some(u) = queue.pop_front() {
        touched.clear();
        state.remove(graph, u, mask.as_slice(), &mut touched);
        for &v in &touched {
            if mask.contains(v) && state.key(v) < threshold {
                mask.remove(v);
                queue.push_back(v);
            }
        }
    }
}

fn require_two_attrs(graph: &AttributedGraph, what: &'static str) -> Result<()> {
    if graph.num_attrs() != 2 {
        return Err(Error::RequiresTwoAttributes {
            what,
            found: graph.num_attrs(),
        });
    }
    Ok(())
}

/// Colorful k-core of the whole graph.
pub fn colorful_core(graph: &AttributedGraph, coloring: &Coloring, k: usize) -> VertexMask {
    colorful_core_within(graph, coloring, VertexMask::full(graph.n()), k)
}

/// Colorful k-core of the subgraph induced by `mask`.
pub fn colorful_core_within(
    graph: &AttributedGraph,
    coloring: &Coloring,
    mut mask: VertexMask,
    k: usize,
) -> VertexMask {
    if k == 0 {
        return mask;
    }
    let mut state = ColorfulDegreeState::new(graph, coloring, &mask);
    peel(graph, &mut state, &mut mask, k);
    mask
}

/// Fairness k-core; requires exactly two attribute values.
pub fn fairness_core(graph: &AttributedGraph, coloring: &Coloring, k: usize) -> Result<VertexMask> {
    fairness_core_within(graph, coloring, VertexMask::full(graph.n()), k)
}

pub fn fairness_core_within(
    graph: &AttributedGraph,
    coloring: &Coloring,
    mask: VertexMask,
    k: usize,
) -> Result<VertexMask> {
    require_two_attrs(graph, "the fairness core")?;
    if k == 0 {
        return Ok(mask);
    }
    let mut mask = colorful_core_within(graph, coloring, mask, k);
    let mut state = FairnessState(GroupState::new(graph, coloring, &mask));
    peel(graph, &mut state, &mut mask, 2 * k);
    Ok(mask)
}

/// Enhanced colorful k-core; requires exactly two attribute values.
pub fn enhanced_colorful_core(graph: &AttributedGraph, coloring: &Coloring, k: usize) -> Result<VertexMask> {
    enhanced_colorful_core_within(graph, coloring, VertexMask::full(graph.n()), k)
}

pub fn enhanced_colorful_core_within(
    graph: &AttributedGraph,
    coloring: &Coloring,
    mut mask: VertexMask,
    k: usize,
) -> Result<VertexMask> {
    require_two_attrs(graph, "the enhanced colorful core")?;
    if k == 0 {
        return Ok(mask);
    }
    let mut state = EnhancedState {
        groups: GroupState::new(graph, coloring, &mask),
        k,
    };
    peel(graph, &mut state, &mut mask, k);
    Ok(mask)
}

/// Group counts of every alive vertex under `mask`; two attributes only.
pub fn group_counts(graph: &AttributedGraph, coloring: &Coloring, mask: &VertexMask) -> Result<Vec<GroupCounts>> {
    require_two_attrs(graph, "group counts")?;
    let state = GroupState::new(graph, coloring, mask);
    Ok(graph.vertices().map(|v| state.groups(v)).collect())
}

/// Which core to apply before enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum PruneKind {
    None,
    Colorful,
    Enhanced,
    Fairness,
    /// Strongest core applicable to the model and attribute count.
    #[default]
    Auto,
}

impl PruneKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PruneKind::None => "none",
            PruneKind::Colorful => "colorful",
            PruneKind::Enhanced => "enhanced",
            PruneKind::Fairness => "fairness",
            PruneKind::Auto => "auto",
        }
    }
}

impl fmt::Display for PruneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PruneKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "none" => PruneKind::None,
            "colorful" => PruneKind::Colorful,
            "enhanced" => PruneKind::Enhanced,
            "fairness" => PruneKind::Fairness,
            "auto" => PruneKind::Auto,
            other => return Err(Error::InvalidParameter(format!("unknown prune kind `{other}`"))),
        })
    }
}

/// Applies a concrete core (not `Auto`) at level `k`.
pub fn apply_core(graph: &AttributedGraph, coloring: &Coloring, kind: PruneKind, k: usize) -> Result<VertexMask> {
    let full = VertexMask::full(graph.n());
    match kind {
        PruneKind::None => Ok(full),
        PruneKind::Colorful => Ok(colorful_core_within(graph, coloring, full, k)),
        PruneKind::Enhanced => enhanced_colorful_core_within(graph, coloring, full, k),
        PruneKind::Fairness => fairness_core_within(graph, coloring, full, k),
        PruneKind::Auto => Err(Error::InvalidParameter("prune kind must be resolved before use".into())),
    }
}
