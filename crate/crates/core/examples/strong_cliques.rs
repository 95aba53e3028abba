//! Strong fair cliques on the F2 fixture (K7 with four `a` and three `b`
//! vertices) and on a random three-attribute graph.

use fairclique::generate::{fixture_f2, gnp};
use fairclique::{assign_random_attributes, is_maximal_strong, sfc_enum, OrderingKind};

fn main() -> fairclique::Result<()> {
    let f2 = fixture_f2();
    for c in &sfc_enum(&f2, 3, OrderingKind::Auto)? {
        println!("F2: {:?}", c.original_ids(&f2));
    }
    // the fourth `a` vertex cannot be added without a matching `b`
    let v7 = f2.dense_id_of(7).unwrap();
    println!("{{v7}} leaves the clique maximal: {}", is_maximal_strong(&f2, &[v7]));

    let g = assign_random_attributes(gnp(80, 0.35, 2), 3, 2)?;
    let strong = sfc_enum(&g, 1, OrderingKind::HeurOd)?;
    println!("random d=3 graph: {} strong fair cliques with k=1", strong.len());
    Ok(())
}
