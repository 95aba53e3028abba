//! Degree-ordered greedy vertex coloring.

use crate::graph::{Graph, VertexId, VertexMask};

pub type Color = u32;

/// Color of vertices outside the mask that was colored.
pub const UNCOLORED: Color = Color::MAX;

/// How vertices of equal degree are ordered before coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    AscendingId,
    DescendingId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color: Vec<Color>,
    num_colors: usize,
}

impl Coloring {
    #[inline]
    pub fn color(&self, v: VertexId) -> Color {
        self.color[v as usize]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Wraps an explicit assignment; colors are renumbered to a contiguous
    /// range in order of first use.
    pub fn from_colors(raw: Vec<Color>) -> Self {
        let mut remap = std::collections::HashMap::new();
        let color = raw
            .into_iter()
            .map(|c| {
                if c == UNCOLORED {
                    return UNCOLORED;
                }
                let next = remap.len() as Color;
                *remap.entry(c).or_insert(next)
            })
            .collect();
        Coloring {
            color,
            num_colors: remap.len(),
        }
    }
}

/// Greedy coloring of the alive vertices, processed in non-increasing degree
/// (degree within the mask), ties by ascending id. Each vertex takes the
/// smallest color not used by an already colored neighbor.
pub fn greedy_color(graph: &Graph, mask: &VertexMask) -> Coloring {
    greedy_color_with(graph, mask, TieBreak::AscendingId)
}

pub fn greedy_color_with(graph: &Graph, mask: &VertexMask, tie: TieBreak) -> Coloring {
    let live_degree = |v: VertexId| graph.neighbors(v).iter().filter(|&&w| mask.contains(w)).count();
    let mut order: Vec<(usize, VertexId)> = mask.iter().map(|v| (live_degree(v), v)).collect();
    match tie {
        TieBreak::AscendingId => order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1))),
        TieBreak::DescendingId => order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1))),
    }

    let mut color = vec![UNCOLORED; graph.n()];
    // used[c] == stamp marks color c as taken by a neighbor of the current vertex
    let mut used: Vec<usize> = Vec::new();
    let mut num_colors = 0usize;
    for (stamp, &(_, v)) in order.iter().enumerate() {
        let stamp = stamp + 1;
        for &w in graph.neighbors(v) {
            let c = color[w as usize];
            if c != UNCOLORED {
                used[c as usize] = stamp;
            }
        }
        let c = (0..num_colors).find(|&c| used[c] != stamp).unwrap_or(num_colors);
        if c == num_colors {
            num_colors += 1;
            used.push(0);
        }
        color[v as usize] = c as Color;
    }
    Coloring { color, num_colors }
}

/// True iff no edge joins two vertices of the same color. Edges touching an
/// uncolored vertex are ignored.
pub fn validate_coloring(graph: &Graph, coloring: &Coloring) -> bool {
    graph.edges().all(|(u, v)| {
        let (cu, cv) = (coloring.color(u), coloring.color(v));
        cu == UNCOLORED || cv == UNCOLORED || cu != cv
    })
}
