//! Weak fair cliques: maximal cliques with at least k vertices of every
//! attribute. With k = 0 this is plain maximal clique enumeration.

use fairclique::generate::gnp;
use fairclique::{assign_random_attributes, wfc_enum, OrderingKind, PruneKind};

fn main() -> fairclique::Result<()> {
    let g = assign_random_attributes(gnp(60, 0.3, 4), 2, 4)?;
    for k in 0..=3 {
        let cliques = wfc_enum(&g, k, OrderingKind::Auto, PruneKind::Auto)?;
        let largest = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
        println!("k={k}: {} cliques, largest has {largest} vertices", cliques.len());
    }
    let k2 = wfc_enum(&g, 2, OrderingKind::Auto, PruneKind::Auto)?;
    for c in k2.iter().take(5) {
        println!("  {:?} counts {:?}", c.original_ids(&g), c.attr_counts());
    }
    Ok(())
}
