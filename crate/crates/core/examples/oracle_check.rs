//! Cross-check the enumerators against the brute-force baselines on small
//! random graphs.

use fairclique::assign_random_attributes;
use fairclique::enumerate::{run, EnumRequest, Model};
use fairclique::generate::gnp;
use fairclique::oracle::baseline;

fn main() -> fairclique::Result<()> {
    let mut checked = 0;
    for seed in 0..50u64 {
        let d = 1 + (seed % 3) as usize;
        let g = assign_random_attributes(gnp(20, 0.5, seed), d, seed)?;
        for (model, delta) in [(Model::Weak, None), (Model::Strong, None), (Model::Relative, Some(1))] {
            let got = run(&g, &EnumRequest::new(model, 2).delta(delta))?.cliques;
            let expected = baseline(&g, model, 2, delta);
            assert_eq!(got, expected, "seed {seed} {model}");
            checked += 1;
        }
    }
    println!("{checked} runs matched the baselines");
    Ok(())
}
