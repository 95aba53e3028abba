//! Backtracking enumerators for the three fairness models.
//!
//! Every enumerator runs the same pipeline: color the graph, peel it with a
//! core at level `k - 1`, rank the surviving vertices, then search each
//! connected component independently.

mod component;
mod relative;
mod strong;
mod weak;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::cliques::CliqueSet;
use crate::coloring::{greedy_color_with, TieBreak};
use crate::error::{Error, Result};
use crate::graph::{connected_components, AttributedGraph, VertexId, VertexMask};
use crate::ordering::{compute_ordering, OrderingKind};
use crate::pruning::{apply_core, PruneKind};

pub use component::ComponentView;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Weak,
    Strong,
    Relative,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Weak => "weak",
            Model::Strong => "strong",
            Model::Relative => "relative",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(Model::Weak),
            "strong" => Ok(Model::Strong),
            "relative" => Ok(Model::Relative),
            other => Err(Error::InvalidParameter(format!("unknown model `{other}`"))),
        }
    }
}

/// Search used for the relative model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum RelativeMethod {
    /// Weak cliques first, then trimmed to the difference bound.
    Refine,
    /// Direct attribute-alternating search.
    #[default]
    Alter,
}

/// Everything that determines one enumeration run.
#[derive(Debug, Clone)]
pub struct EnumRequest {
    pub model: Model,
    pub k: usize,
    /// Difference bound for the relative model; `None` is unbounded.
    pub delta: Option<usize>,
    pub ordering: OrderingKind,
    pub prune: PruneKind,
    pub method: RelativeMethod,
    pub tie_break: TieBreak,
    pub threads: usize,
}

impl EnumRequest {
    pub fn new(model: Model, k: usize) -> Self {
        EnumRequest {
            model,
            k,
            delta: None,
            ordering: OrderingKind::Auto,
            prune: PruneKind::Auto,
            method: RelativeMethod::default(),
            tie_break: TieBreak::default(),
            threads: 1,
        }
    }

    pub fn delta(mut self, delta: Option<usize>) -> Self {
        self.delta = delta;
        self
    }

    pub fn ordering(mut self, ordering: OrderingKind) -> Self {
        self.ordering = ordering;
        self
    }

    pub fn prune(mut self, prune: PruneKind) -> Self {
        self.prune = prune;
        self
    }

    pub fn method(mut self, method: RelativeMethod) -> Self {
        self.method = method;
        self
    }

    pub fn tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.model != Model::Weak && self.k == 0 {
            return Err(Error::InvalidParameter(format!(
                "k must be at least 1 for the {} model",
                self.model
            )));
        }
        if self.model != Model::Relative && self.delta.is_some() {
            return Err(Error::InvalidParameter(
                "delta only applies to the relative model".into(),
            ));
        }
        Ok(())
    }
}

/// The search actually run after `delta = 0` is routed to the strong model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Search {
    Weak,
    Strong,
    Refine(usize),
    Alter(usize),
}

fn plan(req: &EnumRequest, n: usize) -> Search {
    match req.model {
        Model::Weak => Search::Weak,
        Model::Strong => Search::Strong,
        Model::Relative => match req.delta.map_or(n, |d| d.min(n)) {
            0 => Search::Strong,
            d if req.method == RelativeMethod::Refine => Search::Refine(d.max(1)),
            d => Search::Alter(d.max(1)),
        },
    }
}

/// The core `PruneKind::Auto` stands for: enhanced for weak and relative,
/// fairness for strong, colorful whenever there are not exactly two attributes.
pub fn resolve_prune(model: Model, delta: Option<usize>, num_attrs: usize, kind: PruneKind) -> PruneKind {
    if kind != PruneKind::Auto {
        return kind;
    }
    if num_attrs != 2 {
        return PruneKind::Colorful;
    }
    match (model, delta) {
        (Model::Strong, _) | (Model::Relative, Some(0)) => PruneKind::Fairness,
        _ => PruneKind::Enhanced,
    }
}

/// ColorOD for weak; FairOD (two attributes) or HeurOD for the
/// attribute-alternating searches.
pub fn resolve_ordering(model: Model, num_attrs: usize, kind: OrderingKind) -> OrderingKind {
    if kind != OrderingKind::Auto {
        return kind;
    }
    match model {
        Model::Weak => OrderingKind::ColorOd,
        _ if num_attrs == 2 => OrderingKind::FairOd,
        _ => OrderingKind::HeurOd,
    }
}

/// Wall-clock milliseconds spent in each stage.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimings {
    pub color_ms: f64,
    pub prune_ms: f64,
    pub order_ms: f64,
    pub enumerate_ms: f64,
}

#[derive(Debug, Clone)]
pub struct EnumReport {
    pub cliques: CliqueSet,
    pub prune: PruneKind,
    pub ordering: OrderingKind,
    pub num_colors: usize,
    pub vertices_after: usize,
    pub edges_after: usize,
    /// Cliques emitted by the searches before deduplication.
    pub emitted: usize,
    pub timings: PhaseTimings,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs the full pipeline for `req`.
pub fn run(graph: &AttributedGraph, req: &EnumRequest) -> Result<EnumReport> {
    req.validate()?;
    let a_n = graph.num_attrs();
    let prune = resolve_prune(req.model, req.delta, a_n, req.prune);
    let ordering_kind = resolve_ordering(req.model, a_n, req.ordering);
    let mut timings = PhaseTimings::default();

    let t = Instant::now();
    let coloring = greedy_color_with(graph, &VertexMask::full(graph.n()), req.tie_break);
    timings.color_ms = millis(t);

    let t = Instant::now();
    let mask = apply_core(graph, &coloring, prune, req.k.saturating_sub(1))?;
    timings.prune_ms = millis(t);

    let t = Instant::now();
    let ordering = compute_ordering(graph, &coloring, &mask, ordering_kind)?;
    let min_size = (req.k * a_n).max(1);
    let views: Vec<ComponentView> = connected_components(graph, &mask)
        .into_iter()
        .filter(|c| c.len() >= min_size)
        .map(|c| ComponentView::new(graph, &c, &ordering))
        .collect();
    timings.order_ms = millis(t);

    let t = Instant::now();
    let search = plan(req, graph.n());
    let k = req.k;
    let per_component = |view: &ComponentView| -> Vec<Vec<VertexId>> {
        let local = match search {
            Search::Weak => weak::search(view, k),
            Search::Strong => strong::search(view, k),
            Search::Refine(d) => relative::refine(view, k, d),
            Search::Alter(d) => relative::alter(view, k, d),
        };
        local.iter().map(|c| view.to_global(c)).collect()
    };
    let found: Vec<Vec<Vec<VertexId>>> = if req.threads <= 1 {
        views.iter().map(per_component).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(req.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| views.par_iter().map(per_component).collect())
    };
    let mut cliques = CliqueSet::new();
    let mut emitted = 0;
    for clique in found.into_iter().flatten() {
        emitted += 1;
        cliques.insert_vertices(graph, clique);
    }
    timings.enumerate_ms = millis(t);

    Ok(EnumReport {
        cliques,
        prune,
        ordering: ordering_kind,
        num_colors: coloring.num_colors(),
        vertices_after: mask.count(),
        edges_after: graph.edges_within(&mask),
        emitted,
        timings,
    })
}

/// Weak fair cliques: maximal cliques with at least `k` vertices of every
/// attribute. `k = 0` lists all maximal cliques.
pub fn wfc_enum(graph: &AttributedGraph, k: usize, ordering: OrderingKind, prune: PruneKind) -> Result<CliqueSet> {
    let req = EnumRequest::new(Model::Weak, k).ordering(ordering).prune(prune);
    Ok(run(graph, &req)?.cliques)
}

/// Strong fair cliques: equal attribute counts of at least `k`, maximal
/// among such cliques.
pub fn sfc_enum(graph: &AttributedGraph, k: usize, ordering: OrderingKind) -> Result<CliqueSet> {
    let req = EnumRequest::new(Model::Strong, k).ordering(ordering);
    Ok(run(graph, &req)?.cliques)
}

/// Relative fair cliques by trimming weak fair cliques.
pub fn rfc_refine_enum(graph: &AttributedGraph, k: usize, delta: Option<usize>) -> Result<CliqueSet> {
    let req = EnumRequest::new(Model::Relative, k)
        .delta(delta)
        .method(RelativeMethod::Refine);
    Ok(run(graph, &req)?.cliques)
}

/// Relative fair cliques by attribute-alternating search.
pub fn rfc_alter_enum(
    graph: &AttributedGraph,
    k: usize,
    delta: Option<usize>,
    ordering: OrderingKind,
) -> Result<CliqueSet> {
    let req = EnumRequest::new(Model::Relative, k)
        .delta(delta)
        .ordering(ordering)
        .method(RelativeMethod::Alter);
    Ok(run(graph, &req)?.cliques)
}

/// True iff `candidates` (vertices adjacent to every member of some balanced
/// clique) contain no clique with exactly one vertex per attribute, i.e. the
/// balanced clique cannot grow while staying balanced.
pub fn is_maximal_strong(graph: &AttributedGraph, candidates: &[VertexId]) -> bool {
    let mut classes = vec![Vec::new(); graph.num_attrs()];
    for &v in candidates {
        classes[graph.attr(v) as usize].push(v);
    }
    strong::no_rainbow(&classes, &|u, v| graph.has_edge(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{fixture_f1, fixture_f2, gnp};
    use crate::graph::{assign_random_attributes, Graph};
    use crate::oracle::{base_relative, base_strong, base_weak, bk_pivot_maximal_cliques};

    fn ids(g: &AttributedGraph, set: &CliqueSet) -> Vec<Vec<u64>> {
        set.iter().map(|c| c.original_ids(g)).collect()
    }

    #[test]
    fn fixtures() {
        let f1 = fixture_f1();
        let f2 = fixture_f2();
        let auto = OrderingKind::Auto;
        assert_eq!(
            ids(&f2, &wfc_enum(&f2, 3, auto, PruneKind::Auto).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6, 7]]
        );
        assert_eq!(
            ids(&f1, &wfc_enum(&f1, 2, auto, PruneKind::Auto).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6]]
        );
        assert_eq!(ids(&f1, &sfc_enum(&f1, 2, auto).unwrap()), vec![vec![1, 2, 3, 4, 5, 6]]);
        assert_eq!(sfc_enum(&f2, 3, auto).unwrap(), base_strong(&f2, 3));
        assert_eq!(sfc_enum(&f2, 3, auto).unwrap().len(), 4);
        assert!(sfc_enum(&f2, 4, auto).unwrap().is_empty());
        assert_eq!(rfc_refine_enum(&f2, 3, Some(0)).unwrap(), base_strong(&f2, 3));
        assert_eq!(
            ids(&f2, &rfc_refine_enum(&f2, 3, Some(1)).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6, 7]]
        );
        assert_eq!(
            ids(&f2, &rfc_alter_enum(&f2, 3, Some(1), auto).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6, 7]]
        );
        assert_eq!(
            rfc_refine_enum(&f1, 2, Some(5)).unwrap(),
            wfc_enum(&f1, 2, auto, PruneKind::Auto).unwrap()
        );
        assert_eq!(
            ids(&f1, &rfc_alter_enum(&f1, 2, Some(0), auto).unwrap()),
            vec![vec![1, 2, 3, 4, 5, 6]]
        );
    }

    #[test]
    fn weak_k0_is_all_maximal_cliques() {
        for seed in 0..10 {
            let g = assign_random_attributes(gnp(18, 0.4, seed), 2, seed).unwrap();
            let all = bk_pivot_maximal_cliques(&g, &VertexMask::full(g.n()));
            assert_eq!(wfc_enum(&g, 0, OrderingKind::Auto, PruneKind::Auto).unwrap(), all);
        }
    }

    #[test]
    fn rainbow_check() {
        let g = Graph::from_dense_edges(3, [(0, 1)]);
        let g = AttributedGraph::from_labels(g, &["a", "b", "b"]).unwrap();
        assert!(is_maximal_strong(&g, &[0]));
        assert!(!is_maximal_strong(&g, &[0, 1]));
        assert!(is_maximal_strong(&g, &[0, 2]));
    }

    #[test]
    fn rejects_bad_requests() {
        let f1 = fixture_f1();
        assert!(sfc_enum(&f1, 0, OrderingKind::Auto).is_err());
        assert!(run(&f1, &EnumRequest::new(Model::Weak, 1).delta(Some(1))).is_err());
    }

    #[test]
    fn random_small_graphs_match_baselines() {
        for seed in 0..40u64 {
            let d = 1 + (seed % 3) as usize;
            let g = assign_random_attributes(gnp(16, 0.5, seed), d, seed).unwrap();
            for k in 1..=2 {
                let auto = OrderingKind::Auto;
                assert_eq!(
                    wfc_enum(&g, k, auto, PruneKind::Auto).unwrap(),
                    base_weak(&g, k),
                    "weak seed {seed} k {k}"
                );
                assert_eq!(
                    sfc_enum(&g, k, auto).unwrap(),
                    base_strong(&g, k),
                    "strong seed {seed} k {k}"
                );
                for delta in [1, 2] {
                    let expected = base_relative(&g, k, Some(delta));
                    assert_eq!(
                        rfc_refine_enum(&g, k, Some(delta)).unwrap(),
                        expected,
                        "refine seed {seed}"
                    );
                    assert_eq!(
                        rfc_alter_enum(&g, k, Some(delta), auto).unwrap(),
                        expected,
                        "alter seed {seed}"
                    );
                }
            }
        }
    }
}
