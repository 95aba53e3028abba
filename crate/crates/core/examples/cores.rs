//! Compare the three cores on a random two-attribute graph as k grows.
//!
//!     cargo run --release --example cores -- 20000 100000

use std::env;

use fairclique::generate::gnm;
use fairclique::{
    assign_random_attributes, colorful_core, enhanced_colorful_core, fairness_core, greedy_color, VertexMask,
};

fn main() -> fairclique::Result<()> {
    let mut args = env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(5_000);
    let m = args.next().unwrap_or(40_000);
    let g = assign_random_attributes(gnm(n, m, 1), 2, 1)?;
    let coloring = greedy_color(&g, &VertexMask::full(g.n()));
    println!("n={} m={} colors={}", g.n(), g.m(), coloring.num_colors());
    println!("{:>3} {:>10} {:>10} {:>10}", "k", "colorful", "enhanced", "fairness");
    for k in 1..=8 {
        let colorful = colorful_core(&g, &coloring, k);
        let enhanced = enhanced_colorful_core(&g, &coloring, k)?;
        let fairness = fairness_core(&g, &coloring, k)?;
        println!(
            "{k:>3} {:>10} {:>10} {:>10}",
            colorful.count(),
            enhanced.count(),
            fairness.count()
        );
    }
    Ok(())
}
