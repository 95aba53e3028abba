//! Load an attributed graph from files, split it into components and color it.
//!
//!     cargo run --example load_and_color -- data/f3.edges data/f3.attrs

use std::env;

use fairclique::{connected_components, greedy_color, load_attributes, load_edge_list, validate_coloring, VertexMask};

fn main() -> fairclique::Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    let args: Vec<String> = env::args().skip(1).collect();
    let (edges, attrs) = match args.as_slice() {
        [e, a] => (e.clone(), a.clone()),
        _ => (format!("{root}/data/f3.edges"), format!("{root}/data/f3.attrs")),
    };
    let graph = load_attributes(load_edge_list(&edges)?, &attrs)?;
    println!("n={} m={} attributes={:?}", graph.n(), graph.m(), graph.attr_names());

    let all = VertexMask::full(graph.n());
    for (i, comp) in connected_components(&graph, &all).iter().enumerate() {
        println!("component {i}: {} vertices", comp.len());
    }

    let coloring = greedy_color(&graph, &all);
    println!(
        "{} colors, proper: {}",
        coloring.num_colors(),
        validate_coloring(&graph, &coloring)
    );
    for v in graph.vertices() {
        let name = &graph.attr_names()[graph.attr(v) as usize];
        println!("  v{} attr={name} color={}", graph.original_id(v), coloring.color(v));
    }
    Ok(())
}
