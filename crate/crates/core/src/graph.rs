//! Vertex-attributed undirected graphs.
//!
//! Vertices are stored under dense ids `0..n`; the original ids read from the
//! input files are kept alongside so results can be reported in the caller's
//! id space. Neighbor lists are sorted and duplicate free, which lets the
//! enumerators intersect candidate sets with a linear merge.

use std::collections::{HashMap, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::ops::Deref;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type AttrId = u32;

/// Undirected simple graph without attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    original_ids: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph over dense ids `0..n` whose original ids equal the dense ids.
    /// Self-loops and repeated edges are dropped.
    pub fn from_dense_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        Self::finish(adj, (0..n as u64).collect())
    }

    /// Builds a graph from edges over arbitrary original ids. Dense ids follow
    /// first appearance.
    pub fn from_original_edges(edges: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut builder = IdRemap::default();
        let mut adj: Vec<Vec<VertexId>> = Vec::new();
        for (a, b) in edges {
            let u = builder.intern(a);
            let v = builder.intern(b);
            if adj.len() < builder.len() {
                adj.resize(builder.len(), Vec::new());
            }
            if u != v {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        Self::finish(adj, builder.ids)
    }

    fn finish(mut adj: Vec<Vec<VertexId>>, original_ids: Vec<u64>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph {
            adj,
            original_ids,
            m: twice_m / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v as usize]
    }

    pub fn original_ids(&self) -> &[u64] {
        &self.original_ids
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Every edge once, as `(u, v)` with `u < v` in dense ids.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Number of edges with both endpoints alive in `mask`.
    pub fn edges_within(&self, mask: &VertexMask) -> usize {
        self.edges()
            .filter(|&(u, v)| mask.contains(u) && mask.contains(v))
            .count()
    }

    pub fn dense_id_of(&self, original: u64) -> Option<VertexId> {
        self.original_ids
            .iter()
            .position(|&o| o == original)
            .map(|p| p as VertexId)
    }
}

#[derive(Default)]
struct IdRemap {
    index: HashMap<u64, VertexId>,
    ids: Vec<u64>,
}

impl IdRemap {
    fn intern(&mut self, original: u64) -> VertexId {
        let next = self.ids.len() as VertexId;
        *self.index.entry(original).or_insert_with(|| {
            self.ids.push(original);
            next
        })
    }

    fn len(&self) -> usize {
        self.ids.len()
    }
}

fn is_comment(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#') || t.starts_with('%')
}

/// Parses a whitespace-separated edge list. Only the first two tokens of a
/// line are read, so weighted or timestamped edge files load as well.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if is_comment(&line) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut next_id = || -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two vertex ids".into(),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer vertex id"),
            })
        };
        let a = next_id()?;
        let b = next_id()?;
        edges.push((a, b));
    }
    let graph = Graph::from_original_edges(edges);
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(graph)
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_edge_list(BufReader::new(file))
}

/// Writes one `u v` line per edge using original ids.
pub fn write_edge_list<W: Write>(graph: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", graph.original_id(u), graph.original_id(v))?;
    }
    Ok(())
}

/// A graph with exactly one categorical attribute value per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributedGraph {
    graph: Graph,
    attr: Vec<AttrId>,
    attr_names: Vec<String>,
}

impl Deref for AttributedGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl AttributedGraph {
    /// Attaches attribute indices. Every index in `0..attr_names.len()` must be
    /// used by at least one vertex.
    pub fn new(graph: Graph, attr: Vec<AttrId>, attr_names: Vec<String>) -> Result<Self> {
        if attr.len() != graph.n() {
            return Err(Error::Attributes(format!(
                "{} attribute values for {} vertices",
                attr.len(),
                graph.n()
            )));
        }
        let mut seen = vec![false; attr_names.len()];
        for &a in &attr {
            let slot = seen
                .get_mut(a as usize)
                .ok_or_else(|| Error::Attributes(format!("attribute index {a} out of range")))?;
            *slot = true;
        }
        if let Some(unused) = seen.iter().position(|s| !s) {
            return Err(Error::Attributes(format!(
                "attribute `{}` is not held by any vertex",
                attr_names[unused]
            )));
        }
        Ok(AttributedGraph {
            graph,
            attr,
            attr_names,
        })
    }

    /// Maps per-vertex labels (in dense id order) to indices by first appearance.
    pub fn from_labels<S: AsRef<str>>(graph: Graph, labels: &[S]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<&str, AttrId> = HashMap::new();
        let mut attr = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let id = *index.entry(label).or_insert_with(|| {
                names.push(label.to_string());
                (names.len() - 1) as AttrId
            });
            attr.push(id);
        }
        Self::new(graph, attr, names)
    }

    pub fn topology(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn attr(&self, v: VertexId) -> AttrId {
        self.attr[v as usize]
    }

    pub fn attrs(&self) -> &[AttrId] {
        &self.attr
    }

    /// Number of distinct attribute values.
    pub fn num_attrs(&self) -> usize {
        self.attr_names.len()
    }

    pub fn attr_names(&self) -> &[String] {
        &self.attr_names
    }

    pub fn attr_counts(&self, vertices: &[VertexId]) -> Vec<usize> {
        let mut counts = vec![0; self.num_attrs()];
        for &v in vertices {
            counts[self.attr(v) as usize] += 1;
        }
        counts
    }

    pub fn write_attributes<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for v in self.vertices() {
            writeln!(
                out,
                "{} {}",
                self.original_id(v),
                self.attr_names[self.attr(v) as usize]
            )?;
        }
        Ok(())
    }
}

/// Reads `original_id label` lines; every vertex must be covered exactly once.
pub fn read_attributes<R: BufRead>(graph: Graph, reader: R) -> Result<AttributedGraph> {
    let index: HashMap<u64, VertexId> = graph
        .original_ids()
        .iter()
        .enumerate()
        .map(|(d, &o)| (o, d as VertexId))
        .collect();
    let mut labels: Vec<Option<String>> = vec![None; graph.n()];
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if is_comment(&line) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(id), Some(label)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: "expected `vertex_id label`".into(),
            });
        };
        let original: u64 = id.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("`{id}` is not a vertex id"),
        })?;
        let dense = *index
            .get(&original)
            .ok_or_else(|| Error::Attributes(format!("line {line_no}: unknown vertex {original}")))?;
        let slot = &mut labels[dense as usize];
        if slot.is_some() {
            return Err(Error::Attributes(format!(
                "line {line_no}: vertex {original} assigned twice"
            )));
        }
        *slot = Some(label.to_string());
    }
    let mut resolved = Vec::with_capacity(labels.len());
    for (v, label) in labels.into_iter().enumerate() {
        match label {
            Some(l) => resolved.push(l),
            None => {
                return Err(Error::Attributes(format!(
                    "vertex {} has no attribute",
                    graph.original_id(v as VertexId)
                )))
            }
        }
    }
    AttributedGraph::from_labels(graph, &resolved)
}

pub fn load_attributes(graph: Graph, path: impl AsRef<Path>) -> Result<AttributedGraph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_attributes(graph, BufReader::new(file))
}

const MAX_ATTRIBUTE_DRAWS: usize = 1000;

/// Assigns each vertex an attribute drawn uniformly from `0..d`.
///
/// The generator is ChaCha8 seeded through `seed_from_u64(seed)`, so the
/// assignment is identical on every platform. Draws are repeated until every
/// attribute is used at least once.
pub fn assign_random_attributes(graph: Graph, d: usize, seed: u64) -> Result<AttributedGraph> {
    if d == 0 {
        return Err(Error::InvalidParameter("attribute count must be at least 1".into()));
    }
    if graph.n() < d {
        return Err(Error::InvalidParameter(format!(
            "cannot cover {d} attributes with {} vertices",
            graph.n()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..d).map(|i| i.to_string()).collect();
    for _ in 0..MAX_ATTRIBUTE_DRAWS {
        let attr: Vec<AttrId> = (0..graph.n()).map(|_| rng.gen_range(0..d as AttrId)).collect();
        let mut seen = vec![false; d];
        for &a in &attr {
            seen[a as usize] = true;
        }
        if seen.iter().all(|&s| s) {
            return AttributedGraph::new(graph, attr, names);
        }
    }
    Err(Error::RetriesExhausted {
        d,
        attempts: MAX_ATTRIBUTE_DRAWS,
    })
}

/// Set of surviving vertices over a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMask {
    alive: Vec<bool>,
    alive_count: usize,
}

impl VertexMask {
    pub fn full(n: usize) -> Self {
        VertexMask {
            alive: vec![true; n],
            alive_count: n,
        }
    }

    pub fn empty(n: usize) -> Self {
        VertexMask {
            alive: vec![false; n],
            alive_count: 0,
        }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut mask = Self::empty(n);
        for v in vertices {
            mask.insert(v);
        }
        mask
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.alive[v as usize]
    }

    pub fn insert(&mut self, v: VertexId) {
        if !self.alive[v as usize] {
            self.alive[v as usize] = true;
            self.alive_count += 1;
        }
    }

    pub fn remove(&mut self, v: VertexId) {
        if self.alive[v as usize] {
            self.alive[v as usize] = false;
            self.alive_count -= 1;
        }
    }

    pub fn count(&self) -> usize {
        self.alive_count
    }

    pub fn is_empty(&self) -> bool {
        self.alive_count == 0
    }

    pub fn universe(&self) -> usize {
        self.alive.len()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.alive
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(v, _)| v as VertexId)
    }

    pub fn is_subset_of(&self, other: &VertexMask) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

/// Partitions the alive vertices into connected components. Each component
/// is sorted ascending and components are ordered by their smallest vertex.
pub fn connected_components(graph: &Graph, mask: &VertexMask) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; graph.n()];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for s in mask.iter() {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        queue.push_back(s);
        let mut component = Vec::new();
        while let Some(u) = queue.pop_front() {
            component.push(u);
            for &v in graph.neighbors(u) {
                if mask.contains(v) && !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

/// A clique stored as a strictly increasing vertex sequence with its
/// per-attribute histogram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    vertices: Vec<VertexId>,
    attr_counts: Vec<usize>,
}

impl Clique {
    pub fn new(graph: &AttributedGraph, mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let attr_counts = graph.attr_counts(&vertices);
        Clique { vertices, attr_counts }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn attr_counts(&self) -> &[usize] {
        &self.attr_counts
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_clique_in(&self, graph: &Graph) -> bool {
        self.vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| self.vertices[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
    }

    /// Vertex-wise containment, `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Clique) -> bool {
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }

    pub fn original_ids(&self, graph: &Graph) -> Vec<u64> {
        let mut ids: Vec<u64> = self.vertices.iter().map(|&v| graph.original_id(v)).collect();
        ids.sort_unstable();
        ids
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Graph> {
        read_edge_list(text.as_bytes())
    }

    #[test]
    fn triangle_loads() {
        let g = parse("0 1\n1 2\n0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn self_loops_and_duplicates_dropped() {
        let g = parse("0 1\n1 0\n2 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree(2), 0);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn sparse_ids_are_remapped_by_first_appearance() {
        let g = parse("# header\n% konect\n100 7\n7 42\n").unwrap();
        assert_eq!(g.original_ids(), &[100, 7, 42]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn malformed_line_names_line_number() {
        match parse("0 1\n\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("5\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(parse("# nothing\n"), Err(Error::EmptyGraph)));
    }

    #[test]
    fn attributes_by_first_appearance() {
        let g = parse("0 1\n1 2\n0 2\n").unwrap();
        let ag = read_attributes(g.clone(), "0 a\n1 a\n2 b\n".as_bytes()).unwrap();
        assert_eq!(ag.attrs(), &[0, 0, 1]);
        assert_eq!(ag.num_attrs(), 2);
        let single = read_attributes(g, "0 b\n1 b\n2 b\n".as_bytes()).unwrap();
        assert_eq!(single.num_attrs(), 1);
    }

    #[test]
    fn attribute_errors() {
        let g = parse("0 1\n1 2\n").unwrap();
        let missing = read_attributes(g.clone(), "0 a\n1 a\n".as_bytes());
        assert!(matches!(missing, Err(Error::Attributes(_))));
        let unknown = read_attributes(g.clone(), "0 a\n1 a\n2 b\n9 b\n".as_bytes());
        assert!(matches!(unknown, Err(Error::Attributes(_))));
        let dup = read_attributes(g, "0 a\n1 a\n1 b\n2 b\n".as_bytes());
        assert!(matches!(dup, Err(Error::Attributes(_))));
    }

    #[test]
    fn random_attributes() {
        let g = Graph::from_dense_edges(100, (0..99).map(|i| (i, i + 1)));
        let one = assign_random_attributes(g.clone(), 1, 3).unwrap();
        assert!(one.attrs().iter().all(|&a| a == 0));
        let a = assign_random_attributes(g.clone(), 4, 7).unwrap();
        let b = assign_random_attributes(g.clone(), 4, 7).unwrap();
        assert_eq!(a.attrs(), b.attrs());
        let counts = a.attr_counts(&g.vertices().collect::<Vec<_>>());
        assert!(counts.iter().all(|&c| c >= 1));
        assert!(assign_random_attributes(g, 0, 1).is_err());
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::from_dense_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let comps = connected_components(&g, &VertexMask::full(6));
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(connected_components(&g, &VertexMask::empty(6)).is_empty());
    }

    #[test]
    fn clique_subset() {
        let g = Graph::from_dense_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]);
        let ag = AttributedGraph::from_labels(g, &["a", "a", "b", "b"]).unwrap();
        let small = Clique::new(&ag, vec![2, 0]);
        let big = Clique::new(&ag, vec![0, 1, 2]);
        assert!(small.is_subset_of(&big));
        assert!(!big.is_subset_of(&small));
        assert_eq!(big.attr_counts(), &[2, 1]);
        assert!(big.is_clique_in(&ag));
        assert!(!Clique::new(&ag, vec![0, 3]).is_clique_in(&ag));
    }
}
