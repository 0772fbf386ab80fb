use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex, VertexSet, WeightFunction};
use crate::scalar::Weight;

use super::{check_len, MwisError, MwisMethod, MwisResult};

/// Exact maximum weight independent set by branch and bound.
///
/// Each node first takes forced vertices (isolated ones, and simplicial ones
/// at least as heavy as every neighbour), splits into connected components
/// when it can, and otherwise branches on the highest-degree vertex,
/// include-branch first. Nodes are pruned with a greedy clique cover bound.
/// Zero-weight vertices are never selected.
pub fn mwis_exact<W: Weight>(g: &Graph, w: &WeightFunction<W>) -> Result<MwisResult<W>, MwisError> {
    check_len(g, w)?;
    let mut live = BitSet::new(g.n());
    for v in g.vertices() {
        if w.get(v).is_positive() {
            live.insert(v);
        }
    }
    let search = Search { g, w: w.as_slice() };
    let best = search.solve(live);
    let set = VertexSet::from(best.set);
    Ok(MwisResult {
        value: w.sum_over(&set),
        set,
        method: MwisMethod::BranchAndBound,
    })
}

struct Incumbent<W> {
    value: W,
    set: Vec<Vertex>,
}

struct Search<'a, W> {
    g: &'a Graph,
    w: &'a [W],
}

impl<W: Weight> Search<'_, W> {
    fn solve(&self, live: BitSet) -> Incumbent<W> {
        let mut best = Incumbent {
            value: W::zero(),
            set: Vec::new(),
        };
        let mut chosen = Vec::new();
        self.branch(live, W::zero(), &mut chosen, &mut best);
        best
    }

    fn row_in(&self, v: Vertex, live: &BitSet) -> BitSet {
        let mut row = self.g.neighbor_set(v).clone();
        row.intersect_with(live);
        row
    }

    fn is_clique(&self, set: &BitSet) -> bool {
        set.iter().all(|u| {
            let mut rest = set.clone();
            rest.remove(u);
            rest.is_subset(self.g.neighbor_set(u))
        })
    }

    /// Takes isolated and dominant simplicial vertices until none remain.
    fn reduce(&self, live: &mut BitSet, value: &mut W, chosen: &mut Vec<Vertex>) {
        loop {
            let mut changed = false;
            let members: Vec<Vertex> = live.iter().collect();
            for v in members {
                if !live.contains(v) {
                    continue;
                }
                let nbrs = self.row_in(v, live);
                let heaviest = nbrs.iter().map(|u| self.w[u]).fold(W::zero(), W::max_of);
                if nbrs.is_empty() || (self.w[v] >= heaviest && self.is_clique(&nbrs)) {
                    chosen.push(v);
                    *value = *value + self.w[v];
                    live.remove(v);
                    live.difference_with(&nbrs);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Sum of the maximum weights over a greedy clique cover: each clique is
    /// seeded at the smallest uncovered vertex and grown in ascending order.
    fn clique_cover_bound(&self, live: &BitSet) -> W {
        let mut uncovered = live.clone();
        let mut bound = W::zero();
        while let Some(seed) = uncovered.first() {
            uncovered.remove(seed);
            let mut heaviest = self.w[seed];
            let mut candidates = self.row_in(seed, &uncovered);
            while let Some(c) = candidates.first() {
                uncovered.remove(c);
                heaviest = heaviest.max_of(self.w[c]);
                candidates.remove(c);
                candidates.intersect_with(self.g.neighbor_set(c));
            }
            bound = bound + heaviest;
        }
        bound
    }

    fn components(&self, live: &BitSet) -> Vec<BitSet> {
        let mut rest = live.clone();
        let mut comps = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = BitSet::new(self.g.n());
            let mut frontier = vec![s];
            rest.remove(s);
            comp.insert(s);
            while let Some(u) = frontier.pop() {
                let next = self.row_in(u, &rest);
                for x in next.iter() {
                    rest.remove(x);
                    comp.insert(x);
                    frontier.push(x);
                }
            }
            comps.push(comp);
        }
        comps
    }

    fn record(&self, value: W, chosen: &[Vertex], best: &mut Incumbent<W>) {
        if value > best.value {
            best.value = value;
            best.set = chosen.to_vec();
        }
    }

    fn branch(
        &self,
        mut live: BitSet,
        mut value: W,
        chosen: &mut Vec<Vertex>,
        best: &mut Incumbent<W>,
    ) {
        let mark = chosen.len();
        self.reduce(&mut live, &mut value, chosen);

        if live.is_empty() {
            self.record(value, chosen, best);
        } else if value + self.clique_cover_bound(&live) > best.value {
            let comps = self.components(&live);
            if comps.len() > 1 {
                let mut total = value;
                let mut set = chosen.clone();
                for comp in comps {
                    let sub = self.solve(comp);
                    total = total + sub.value;
                    set.extend(sub.set);
                }
                self.record(total, &set, best);
            } else {
                let pivot = live
                    .iter()
                    .max_by(|&a, &b| {
                        let (da, db) = (self.row_in(a, &live).len(), self.row_in(b, &live).len());
                        da.cmp(&db).then(b.cmp(&a))
                    })
                    .expect("live set is non-empty");

                let mut with = live.clone();
                with.remove(pivot);
                with.difference_with(self.g.neighbor_set(pivot));
                chosen.push(pivot);
                self.branch(with, value + self.w[pivot], chosen, best);
                chosen.pop();

                live.remove(pivot);
                self.branch(live, value, chosen, best);
            }
        }
        chosen.truncate(mark);
    }
}
