use std::collections::BTreeSet;

use crate::graph::{AttributedGraph, Clique, Graph, VertexId};

/// Deduplicated result set, ordered by vertex sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliqueSet {
    inner: BTreeSet<Clique>,
}

impl CliqueSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if an equal vertex set was already present.
    pub fn insert(&mut self, clique: Clique) -> bool {
        self.inner.insert(clique)
    }

    pub fn insert_vertices(&mut self, graph: &AttributedGraph, vertices: Vec<VertexId>) -> bool {
        self.insert(Clique::new(graph, vertices))
    }

    pub fn extend(&mut self, other: CliqueSet) {
        self.inner.extend(other.inner);
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clique> {
        self.inner.iter()
    }

    pub fn contains_vertices(&self, vertices: &[VertexId]) -> bool {
        self.inner.iter().any(|c| c.vertices() == vertices)
    }

    /// Vertex sequences, for compact comparisons in tests.
    pub fn vertex_sets(&self) -> Vec<Vec<VertexId>> {
        self.inner.iter().map(|c| c.vertices().to_vec()).collect()
    }

    /// One line per clique with ascending original ids; lines are ordered
    /// lexicographically as integer sequences.
    pub fn to_lines(&self, graph: &Graph) -> Vec<String> {
        let mut rows: Vec<Vec<u64>> = self.inner.iter().map(|c| c.original_ids(graph)).collect();
        rows.sort_unstable();
        rows.into_iter()
            .map(|row| row.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .collect()
    }
}

impl FromIterator<Clique> for CliqueSet {
    fn from_iter<T: IntoIterator<Item = Clique>>(iter: T) -> Self {
        CliqueSet {
            inner: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CliqueSet {
    type Item = &'a Clique;
    type IntoIter = std::collections::btree_set::Iter<'a, Clique>;

    fn into_iter(self) -> Self::IntoIter {
        self.inner.iter()
    }
}
