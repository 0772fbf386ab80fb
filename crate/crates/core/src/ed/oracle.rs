//! Exact-cover search over closed neighbourhoods. Shares no code with the
//! independent set pipeline, so it can serve as its oracle.

use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex, VertexSet, WeightFunction};

/// Backtracking exact cover of `V` by sets `N[c]`. Each step picks the
/// uncovered vertex with the fewest usable dominators (smallest id on ties)
/// and branches on those dominators in ascending order.
pub(crate) struct ExactCover<'a> {
    g: &'a Graph,
    hoods: Vec<Vec<Vertex>>,
    covered: Vec<bool>,
    uncovered: usize,
    chosen: Vec<Vertex>,
}

impl<'a> ExactCover<'a> {
    pub(crate) fn new(g: &'a Graph) -> Self {
        let hoods = g
            .vertices()
            .map(|v| g.closed_neighborhood(v).into_vec())
            .collect();
        Self {
            g,
            hoods,
            covered: vec![false; g.n()],
            uncovered: g.n(),
            chosen: Vec::new(),
        }
    }

    fn usable(&self, c: Vertex) -> bool {
        self.hoods[c].iter().all(|&x| !self.covered[x])
    }

    fn set_cover(&mut self, c: Vertex, on: bool) {
        for i in 0..self.hoods[c].len() {
            let x = self.hoods[c][i];
            self.covered[x] = on;
        }
        if on {
            self.uncovered -= self.hoods[c].len();
            self.chosen.push(c);
        } else {
            self.uncovered += self.hoods[c].len();
            self.chosen.pop();
        }
    }

    /// Most constrained uncovered vertex and its usable dominators.
    fn pick(&self) -> (Vertex, Vec<Vertex>) {
        let mut best: Option<(Vertex, Vec<Vertex>)> = None;
        for u in self.g.vertices().filter(|&u| !self.covered[u]) {
            let cands: Vec<Vertex> = self.hoods[u]
                .iter()
                .copied()
                .filter(|&c| self.usable(c))
                .collect();
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                let empty = cands.is_empty();
                best = Some((u, cands));
                if empty {
                    break;
                }
            }
        }
        best.expect("called with an uncovered vertex")
    }

    /// Visits every exact cover. `prune` sees the partial selection and may
    /// cut the subtree by returning `true`.
    pub(crate) fn for_each<V, P>(&mut self, visit: &mut V, prune: &mut P) -> ControlFlow<()>
    where
        V: FnMut(&[Vertex]) -> ControlFlow<()>,
        P: FnMut(&[Vertex]) -> bool,
    {
        if prune(&self.chosen) {
            return ControlFlow::Continue(());
        }
        if self.uncovered == 0 {
            return visit(&self.chosen);
        }
        let (_, cands) = self.pick();
        for c in cands {
            self.set_cover(c, true);
            let flow = self.for_each(visit, prune);
            self.set_cover(c, false);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Every efficient dominating set of `g`, up to `limit` of them.
pub fn all_efficient_dominating_sets(g: &Graph, limit: Option<usize>) -> Vec<VertexSet> {
    let mut found = Vec::new();
    let mut search = ExactCover::new(g);
    let _ = search.for_each(
        &mut |sel| {
            found.push(VertexSet::from_iter(sel.iter().copied()));
            if limit.is_some_and(|l| found.len() >= l) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
        &mut |_| false,
    );
    found.sort();
    found
}

/// Any e.d., or the least-weight one when weights are given. Returns the set
/// and its weight.
pub(crate) fn best_cover(
    g: &Graph,
    user: Option<&WeightFunction<u64>>,
) -> Option<(VertexSet, u64)> {
    let mut search = ExactCover::new(g);
    match user {
        None => {
            let mut found = None;
            let _ = search.for_each(
                &mut |sel| {
                    found = Some(VertexSet::from_iter(sel.iter().copied()));
                    ControlFlow::Break(())
                },
                &mut |_| false,
            );
            found.map(|s| (s, 0))
        }
        Some(w) => {
            let mut best: Option<(VertexSet, u64)> = None;
            let weight = |sel: &[Vertex]| sel.iter().map(|&v| w.get(v)).sum::<u64>();
            let bound = std::cell::Cell::new(u64::MAX);
            let _ = search.for_each(
                &mut |sel| {
                    let total = weight(sel);
                    if best.as_ref().is_none_or(|(_, b)| total < *b) {
                        best = Some((VertexSet::from_iter(sel.iter().copied()), total));
                        bound.set(total);
                    }
                    ControlFlow::Continue(())
                },
                &mut |sel| weight(sel) >= bound.get(),
            );
            best
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ed::verify_ed;
    use crate::graph::named::*;

    fn enumerate_subsets(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut all: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .collect::<VertexSet>()
            })
            .filter(|s| verify_ed(g, s).unwrap())
            .collect();
        all.sort();
        all
    }

    #[test]
    fn c4_has_none() {
        assert!(enumerate_subsets(&cycle(4)).is_empty());
        assert!(all_efficient_dominating_sets(&cycle(4), None).is_empty());
        assert!(best_cover(&cycle(4), None).is_none());
    }

    #[test]
    fn c6_weighted() {
        let c6 = cycle(6);
        let sets = all_efficient_dominating_sets(&c6, None);
        assert_eq!(sets, enumerate_subsets(&c6));
        assert_eq!(sets.len(), 3);
        let user = WeightFunction::new(vec![1, 2, 3, 4, 5, 6]).unwrap();
        let weights: Vec<u64> = sets.iter().map(|s| user.sum_over(s)).collect();
        assert_eq!(weights, vec![5, 7, 9]);
        let (set, w) = best_cover(&c6, Some(&user)).unwrap();
        assert_eq!(set.as_slice(), &[0, 3]);
        assert_eq!(w, 5);
    }

    #[test]
    fn complete_4_sun_has_none() {
        let sun = complete_sun(4);
        assert!(enumerate_subsets(&sun).is_empty());
        assert!(all_efficient_dominating_sets(&sun, None).is_empty());
    }

    #[test]
    fn limit_is_respected() {
        assert_eq!(all_efficient_dominating_sets(&cycle(6), Some(2)).len(), 2);
    }

    #[test]
    fn matches_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(0..=9);
            let p: f64 = rng.gen_range(0.05..0.8);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(
                all_efficient_dominating_sets(&g, None),
                enumerate_subsets(&g),
                "{g:?}"
            );
        }
    }
}
