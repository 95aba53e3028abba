//! Attribute-alternating backtracking for strong fair cliques.
//!
//! The search picks one vertex of attribute `a_0`, then `a_1`, and so on in a
//! cycle, so the clique is balanced whenever its size is a multiple of the
//! number of attributes. Within one attribute class vertices are taken in
//! increasing rank, which generates every balanced clique exactly once.

use super::component::{descend, merge, ComponentView};

/// True when no clique with exactly one vertex of every attribute can be
/// formed from `classes` (one sorted class per attribute).
///
/// Partial records are grown one attribute at a time, extending a record by
/// a vertex adjacent to all of its members; a complete record refutes
/// maximality.
pub(crate) fn no_rainbow(classes: &[Vec<u32>], adjacent: &impl Fn(u32, u32) -> bool) -> bool {
    fn extend(classes: &[Vec<u32>], depth: usize, record: &mut Vec<u32>, adjacent: &impl Fn(u32, u32) -> bool) -> bool {
        if depth == classes.len() {
            return true;
        }
        for &v in &classes[depth] {
            if record.iter().all(|&w| adjacent(v, w)) {
                record.push(v);
                let found = extend(classes, depth + 1, record, adjacent);
                record.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    if classes.iter().any(Vec::is_empty) {
        return true;
    }
    !extend(classes, 0, &mut Vec::with_capacity(classes.len()), adjacent)
}

pub(crate) fn is_maximal_local(view: &ComponentView, common: &[u32]) -> bool {
    let a_n = view.num_attrs();
    if common.len() < a_n {
        return true;
    }
    let mut classes = vec![Vec::new(); a_n];
    for &v in common {
        classes[view.attr(v)].push(v);
    }
    no_rainbow(&classes, &|u, v| view.adjacent(u, v))
}

struct StrongSearch<'a> {
    view: &'a ComponentView,
    k: usize,
    out: Vec<Vec<u32>>,
}

impl StrongSearch<'_> {
    /// `cand ∪ excl` is always the full common neighborhood of `r`.
    fn backtrack(&mut self, r: &mut Vec<u32>, cand: &[u32], excl: &[u32], phi: usize) {
        let a_n = self.view.num_attrs();
        let min_size = self.k * a_n;
        if r.len().is_multiple_of(a_n) && r.len() >= min_size && !r.is_empty() {
            let common = merge(cand, excl);
            if is_maximal_local(self.view, &common) {
                self.out.push(r.clone());
                return;
            }
        }
        let class: Vec<u32> = cand.iter().copied().filter(|&v| self.view.attr(v) == phi).collect();
        let mut c_cnt = vec![0usize; a_n];
        for u in class {
            let (next, next_excl) = descend(self.view, u, cand, excl);
            c_cnt.iter_mut().for_each(|c| *c = 0);
            for &v in &next {
                c_cnt[self.view.attr(v)] += 1;
            }
            let c_min = *c_cnt.iter().min().unwrap();
            // ties go to the largest attribute index
            let a_min = (0..a_n).rev().find(|&a| c_cnt[a] == c_min).unwrap();
            let size = r.len() + 1;
            let rounds = size / a_n;
            let bound = if size.is_multiple_of(a_n) {
                c_min * a_n + size
            } else if a_min <= phi {
                (c_min + rounds + 1) * a_n
            } else {
                (c_min + rounds) * a_n
            };
            if bound < min_size {
                continue;
            }
            r.push(u);
            self.backtrack(r, &next, &next_excl, (phi + 1) % a_n);
            r.pop();
        }
    }
}

/// All strong fair cliques of one component, as local ids.
pub(crate) fn search(view: &ComponentView, k: usize) -> Vec<Vec<u32>> {
    let mut s = StrongSearch {
        view,
        k,
        out: Vec::new(),
    };
    let all: Vec<u32> = (0..view.len() as u32).collect();
    s.backtrack(&mut Vec::new(), &all, &[], 0);
    s.out
}
