//! Backtracking for weak fair cliques (maximal cliques with at least `k`
//! vertices of every attribute).

use super::component::{intersect, ComponentView};

struct WeakSearch<'a> {
    view: &'a ComponentView,
    k: usize,
    min_size: usize,
    out: Vec<Vec<u32>>,
}

impl WeakSearch<'_> {
    fn backtrack(&mut self, r: &mut Vec<u32>, r_cnt: &mut [usize], cand: &[u32], mut excl: Vec<u32>) {
        if cand.is_empty() && excl.is_empty() {
            if !r.is_empty() && r_cnt.iter().all(|&c| c >= self.k) {
                self.out.push(r.clone());
            }
            return;
        }
        let a_n = self.view.num_attrs();
        let mut c_cnt = vec![0usize; a_n];
        // candidates are sorted by rank, so everything after position i ranks above u
        for (i, &u) in cand.iter().enumerate() {
            let next = intersect(&cand[i + 1..], self.view.neighbors(u));
            if next.len() + r.len() + 1 < self.min_size {
                continue;
            }
            c_cnt.iter_mut().for_each(|c| *c = 0);
            for &v in &next {
                c_cnt[self.view.attr(v)] += 1;
            }
            let au = self.view.attr(u);
            let short = (0..a_n).any(|a| r_cnt[a] + c_cnt[a] + usize::from(a == au) < self.k);
            if short {
                continue;
            }
            let next_excl = intersect(&excl, self.view.neighbors(u));
            r.push(u);
            r_cnt[au] += 1;
            self.backtrack(r, r_cnt, &next, next_excl);
            r_cnt[au] -= 1;
            r.pop();
            let pos = excl.binary_search(&u).unwrap_or_else(|e| e);
            excl.insert(pos, u);
        }
    }
}

/// All weak fair cliques of one component, as local ids.
pub(crate) fn search(view: &ComponentView, k: usize) -> Vec<Vec<u32>> {
    let mut s = WeakSearch {
        view,
        k,
        min_size: k * view.num_attrs(),
        out: Vec::new(),
    };
    let all: Vec<u32> = (0..view.len() as u32).collect();
    let mut r_cnt = vec![0; view.num_attrs()];
    s.backtrack(&mut Vec::new(), &mut r_cnt, &all, Vec::new());
    s.out
}
