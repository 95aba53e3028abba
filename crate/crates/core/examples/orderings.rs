//! Print the five vertex orderings of the F3 fixture.

use fairclique::generate::fixture_f3;
use fairclique::ordering::compute_ordering;
use fairclique::{greedy_color, OrderingKind, VertexMask};

fn main() -> fairclique::Result<()> {
    let g = fixture_f3();
    let all = VertexMask::full(g.n());
    let coloring = greedy_color(&g, &all);
    for kind in OrderingKind::CONCRETE {
        let ordering = compute_ordering(&g, &coloring, &all, kind)?;
        let ids: Vec<String> = ordering
            .order()
            .iter()
            .map(|&v| format!("v{}", g.original_id(v)))
            .collect();
        println!("{:>8}: {}", kind.as_str(), ids.join(" "));
    }
    Ok(())
}
