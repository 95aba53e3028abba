//! Relative fair cliques: counts at least `k` per attribute, pairwise count
//! differences at most `delta`, maximal among such cliques.
//!
//! Both searches assume `delta >= 1`; the `delta = 0` case is the strong model
//! and is routed there by the caller. With `delta >= 1`, a relative clique is
//! maximal iff no single common neighbor can be added, which is what
//! [`extendable`] checks.

use itertools::Itertools;

use super::component::{descend, merge, ComponentView};
use super::weak;

fn within(counts: &[usize], k: usize, delta: usize) -> bool {
    let lo = *counts.iter().min().unwrap();
    let hi = *counts.iter().max().unwrap();
    lo >= k && hi - lo <= delta
}

/// True when some vertex of `common` (the common neighborhood of a clique
/// with `counts`) keeps the constraints after being added.
fn extendable(view: &ComponentView, counts: &mut [usize], common: &[u32], k: usize, delta: usize) -> bool {
    let mut tried = vec![false; counts.len()];
    for &w in common {
        let a = view.attr(w);
        if tried[a] {
            continue;
        }
        tried[a] = true;
        counts[a] += 1;
        let ok = within(counts, k, delta);
        counts[a] -= 1;
        if ok {
            return true;
        }
    }
    false
}

/// Trims every weak fair clique of the component down to the relative
/// constraint and keeps the maximal results.
pub(crate) fn refine(view: &ComponentView, k: usize, delta: usize) -> Vec<Vec<u32>> {
    let a_n = view.num_attrs();
    let mut out = Vec::new();
    for clique in weak::search(view, k) {
        let mut classes = vec![Vec::new(); a_n];
        for &v in &clique {
            classes[view.attr(v)].push(v);
        }
        let a_min = classes.iter().map(Vec::len).min().unwrap();
        let a_max = a_min + delta;
        let (lacking, kept): (Vec<usize>, Vec<usize>) = (0..a_n).partition(|&a| classes[a].len() > a_max);
        if lacking.is_empty() {
            out.push(clique);
            continue;
        }
        let base: Vec<u32> = kept.iter().flat_map(|&a| classes[a].iter().copied()).collect();
        let choices = lacking
            .iter()
            .map(|&a| classes[a].iter().copied().combinations(a_max).collect::<Vec<_>>())
            .multi_cartesian_product();
        for picked in choices {
            let mut q = base.clone();
            q.extend(picked.into_iter().flatten());
            q.sort_unstable();
            let mut counts = view.counts(&q);
            let common = view.common_neighbors(&q);
            if !extendable(view, &mut counts, &common, k, delta) {
                out.push(q);
            }
        }
    }
    out
}

struct AlterSearch<'a> {
    view: &'a ComponentView,
    k: usize,
    delta: usize,
    out: Vec<Vec<u32>>,
}

impl AlterSearch<'_> {
    /// Whether the counts can still end inside one window of width `delta`.
    fn feasible(&self, r_cnt: &[usize], c_cnt: &[usize], open: &[bool]) -> bool {
        let mut max_lo = 0;
        let mut min_hi = usize::MAX;
        for a in 0..r_cnt.len() {
            let (lo, hi) = if open[a] {
                (r_cnt[a].max(self.k), r_cnt[a] + c_cnt[a])
            } else {
                (r_cnt[a], r_cnt[a])
            };
            if lo > hi {
                return false;
            }
            max_lo = max_lo.max(lo);
            min_hi = min_hi.min(hi);
        }
        max_lo <= min_hi + self.delta
    }

    fn backtrack(
        &mut self,
        r: &mut Vec<u32>,
        r_cnt: &mut [usize],
        open: &mut [bool],
        cand: &[u32],
        excl: &[u32],
        phi: usize,
    ) {
        let a_n = r_cnt.len();
        let Some(phi) = (0..a_n).map(|i| (phi + i) % a_n).find(|&a| open[a]) else {
            let common = merge(cand, excl);
            if !extendable(self.view, r_cnt, &common, self.k, self.delta) {
                self.out.push(r.clone());
            }
            return;
        };
        let c_cnt = self.view.counts(cand);
        if !self.feasible(r_cnt, &c_cnt, open) {
            return;
        }
        // closed attributes bound the others from both sides
        let mut cap = usize::MAX;
        let mut floor = self.k;
        for a in (0..a_n).filter(|&a| !open[a]) {
            cap = cap.min(r_cnt[a] + self.delta);
            floor = floor.max(r_cnt[a].saturating_sub(self.delta));
        }
        if r_cnt[phi] < cap {
            let class: Vec<u32> = cand.iter().copied().filter(|&v| self.view.attr(v) == phi).collect();
            for u in class {
                let (next, next_excl) = descend(self.view, u, cand, excl);
                r.push(u);
                r_cnt[phi] += 1;
                self.backtrack(r, r_cnt, open, &next, &next_excl, phi + 1);
                r_cnt[phi] -= 1;
                r.pop();
            }
        }
        if r_cnt[phi] >= floor {
            open[phi] = false;
            self.backtrack(r, r_cnt, open, cand, excl, phi + 1);
            open[phi] = true;
        }
    }
}

/// Attribute-alternating search. At its turn an attribute either takes one
/// more vertex (in increasing rank within its class) or is closed for good;
/// once some attribute is closed, the others are capped at its count plus
/// `delta`.
pub(crate) fn alter(view: &ComponentView, k: usize, delta: usize) -> Vec<Vec<u32>> {
    let a_n = view.num_attrs();
    let mut s = AlterSearch {
        view,
        k,
        delta,
        out: Vec::new(),
    };
    let all: Vec<u32> = (0..view.len() as u32).collect();
    s.backtrack(&mut Vec::new(), &mut vec![0; a_n], &mut vec![true; a_n], &all, &[], 0);
    s.out
}
