//! Drive the full pipeline with explicit options and print the run
//! statistics as JSON, as the command-line tool does with `--stats`.

use std::time::Instant;

use fairclique::enumerate::{run, EnumRequest, Model, RelativeMethod};
use fairclique::generate::gnm;
use fairclique::{assign_random_attributes, OrderingKind, PruneKind, RunStats};

fn main() -> fairclique::Result<()> {
    let t = Instant::now();
    let g = assign_random_attributes(gnm(2_000, 30_000, 6), 2, 6)?;
    let load_ms = t.elapsed().as_secs_f64() * 1e3;
    let req = EnumRequest::new(Model::Relative, 2)
        .delta(Some(1))
        .method(RelativeMethod::Alter)
        .ordering(OrderingKind::FairOd)
        .prune(PruneKind::Enhanced)
        .threads(4);
    let report = run(&g, &req)?;
    println!("{}", RunStats::new(&g, &req, &report, load_ms).to_json());
    Ok(())
}
