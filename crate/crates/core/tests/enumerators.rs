use fairclique::coloring::TieBreak;
use fairclique::enumerate::{run, EnumRequest, Model, RelativeMethod};
use fairclique::generate::gnp;
use fairclique::oracle::{base_relative, base_strong, base_weak};
use fairclique::{assign_random_attributes, AttributedGraph, CliqueSet, OrderingKind, PruneKind};
use proptest::prelude::*;

fn instance(n: usize, p: f64, d: usize, seed: u64) -> AttributedGraph {
    assign_random_attributes(gnp(n, p, seed), d, seed).unwrap()
}

fn enumerate(g: &AttributedGraph, req: EnumRequest) -> CliqueSet {
    run(g, &req).unwrap().cliques
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_models_match_baselines(n in 8usize..22, p in prop::sample::select(vec![0.2, 0.4, 0.6]),
                                  d in 1usize..=3, k in 1usize..=2, delta in 1usize..=2, seed in any::<u64>()) {
        prop_assume!(n >= d);
        let g = instance(n, p, d, seed);
        prop_assert_eq!(enumerate(&g, EnumRequest::new(Model::Weak, k)), base_weak(&g, k));
        prop_assert_eq!(enumerate(&g, EnumRequest::new(Model::Strong, k)), base_strong(&g, k));
        let expected = base_relative(&g, k, Some(delta));
        for method in [RelativeMethod::Refine, RelativeMethod::Alter] {
            let req = EnumRequest::new(Model::Relative, k).delta(Some(delta)).method(method);
            prop_assert_eq!(enumerate(&g, req), expected.clone());
        }
    }

    #[test]
    fn pruning_never_changes_results(n in 10usize..24, seed in any::<u64>(), k in 1usize..=3) {
        let g = instance(n, 0.5, 2, seed);
        for model in [Model::Weak, Model::Strong, Model::Relative] {
            let delta = (model == Model::Relative).then_some(1);
            let reference = enumerate(&g, EnumRequest::new(model, k).delta(delta).prune(PruneKind::None));
            for prune in [PruneKind::Colorful, PruneKind::Enhanced, PruneKind::Fairness, PruneKind::Auto] {
                let got = enumerate(&g, EnumRequest::new(model, k).delta(delta).prune(prune));
                prop_assert_eq!(&got, &reference, "{} with {}", model, prune);
            }
        }
    }
}

#[test]
fn orderings_and_colorings_do_not_matter() {
    for seed in 0..30u64 {
        let d = 2 + (seed % 2) as usize;
        let g = instance(18, 0.5, d, seed);
        for (model, delta) in [(Model::Weak, None), (Model::Strong, None), (Model::Relative, Some(1))] {
            let reference = enumerate(&g, EnumRequest::new(model, 1).delta(delta));
            for ordering in OrderingKind::CONCRETE {
                if ordering == OrderingKind::FairOd && d != 2 {
                    continue;
                }
                for tie in [TieBreak::AscendingId, TieBreak::DescendingId] {
                    let req = EnumRequest::new(model, 1)
                        .delta(delta)
                        .ordering(ordering)
                        .tie_break(tie);
                    assert_eq!(enumerate(&g, req), reference, "seed {seed} {model} {ordering} {tie:?}");
                }
            }
        }
    }
}

#[test]
fn threads_do_not_change_results() {
    // several components so the pool has work to split
    let g = instance(60, 0.08, 2, 3);
    for model in [Model::Weak, Model::Strong] {
        let one = enumerate(&g, EnumRequest::new(model, 1));
        let four = enumerate(&g, EnumRequest::new(model, 1).threads(4));
        assert_eq!(one, four);
    }
}

#[test]
fn emitted_cliques_are_sound() {
    for seed in 0..20u64 {
        let g = instance(20, 0.5, 2, seed);
        for delta in [0, 1, 2] {
            for c in &enumerate(&g, EnumRequest::new(Model::Relative, 1).delta(Some(delta))) {
                assert!(c.is_clique_in(&g));
                let counts = c.attr_counts();
                let (lo, hi) = (*counts.iter().min().unwrap(), *counts.iter().max().unwrap());
                assert!(lo >= 1 && hi - lo <= delta);
            }
        }
    }
}

#[test]
fn larger_k_never_adds_cliques_to_weak() {
    for seed in 0..20u64 {
        let g = instance(22, 0.6, 2, seed);
        let mut last = usize::MAX;
        for k in 1..=4 {
            let set = enumerate(&g, EnumRequest::new(Model::Weak, k));
            assert!(set.len() <= last);
            assert!(set.iter().all(|c| c.attr_counts().iter().all(|&x| x >= k)));
            last = set.len();
        }
    }
}
