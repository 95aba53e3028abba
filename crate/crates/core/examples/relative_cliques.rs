//! Relative fair cliques with both searches, for a range of delta.

use fairclique::generate::gnp;
use fairclique::{assign_random_attributes, rfc_alter_enum, rfc_refine_enum, OrderingKind};

fn main() -> fairclique::Result<()> {
    let g = assign_random_attributes(gnp(70, 0.35, 8), 2, 8)?;
    for delta in [Some(0), Some(1), Some(2), None] {
        let refine = rfc_refine_enum(&g, 1, delta)?;
        let alter = rfc_alter_enum(&g, 1, delta, OrderingKind::Auto)?;
        let label = delta.map_or("inf".to_string(), |d| d.to_string());
        println!(
            "delta={label:>3}: {:>4} cliques (refine and alter agree: {})",
            alter.len(),
            refine == alter
        );
    }
    Ok(())
}
