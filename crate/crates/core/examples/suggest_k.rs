//! Bracket the useful range of k before enumerating.

use fairclique::generate::gnp;
use fairclique::{assign_random_attributes, suggest_k};

fn main() -> fairclique::Result<()> {
    for d in 2..=4 {
        let g = assign_random_attributes(gnp(300, 0.1, 3), d, 3)?;
        let s = suggest_k(&g, 32);
        println!(
            "d={d}: clique size in [{}, {}], try k in [1, {}], nothing above k={}",
            s.clique_lower_bound, s.color_upper_bound, s.k_max, s.k_cap
        );
    }
    Ok(())
}
