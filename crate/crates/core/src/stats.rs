use serde::Serialize;

use crate::enumerate::{EnumReport, EnumRequest};
use crate::graph::AttributedGraph;

/// Measurements of one enumeration run, written as a single JSON object.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunStats {
    pub model: String,
    pub k: usize,
    /// `null` when unbounded or not applicable.
    pub delta: Option<usize>,
    pub d: usize,
    pub ordering: String,
    pub prune: String,
    pub vertices_before: usize,
    pub edges_before: usize,
    pub vertices_after: usize,
    pub edges_after: usize,
    pub colors: usize,
    pub clique_count: usize,
    pub load_ms: f64,
    pub color_ms: f64,
    pub prune_ms: f64,
    pub order_ms: f64,
    pub enumerate_ms: f64,
    pub peak_result_set: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_verdict: Option<String>,
}

impl RunStats {
    pub fn new(graph: &AttributedGraph, req: &EnumRequest, report: &EnumReport, load_ms: f64) -> Self {
        RunStats {
            model: req.model.to_string(),
            k: req.k,
            delta: req.delta,
            d: graph.num_attrs(),
            ordering: report.ordering.to_string(),
            prune: report.prune.to_string(),
            vertices_before: graph.n(),
            edges_before: graph.m(),
            vertices_after: report.vertices_after,
            edges_after: report.edges_after,
            colors: report.num_colors,
            clique_count: report.cliques.len(),
            load_ms,
            color_ms: report.timings.color_ms,
            prune_ms: report.timings.prune_ms,
            order_ms: report.timings.order_ms,
            enumerate_ms: report.timings.enumerate_ms,
            peak_result_set: report.emitted.max(report.cliques.len()),
            oracle_verdict: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}
