//! Chordality with certificates: LexBFS elimination orders or an induced
//! cycle of length at least 4.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

use super::pattern::{Pattern, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("elimination order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("vertex {vertex}: later neighbours {a} and {b} are not adjacent")]
    NotPerfect {
        vertex: Vertex,
        a: Vertex,
        b: Vertex,
    },
}

/// A vertex ordering used for elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl EliminationOrder {
    pub fn new(order: Vec<Vertex>) -> Result<Self, OrderError> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(OrderError::NotAPermutation(n));
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// Neighbours of `v` that come after it in the order.
    pub fn later_neighbors<'a>(
        &'a self,
        g: &'a Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        let pv = self.position[v];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.position[u] > pv)
    }

    /// Checks that the later neighbours of every vertex form a clique. Only
    /// the earliest later neighbour is compared against the rest; the other
    /// pairs are covered when that neighbour is checked itself.
    pub fn check_perfect(&self, g: &Graph) -> Result<(), OrderError> {
        if self.order.len() != g.n() {
            return Err(OrderError::NotAPermutation(g.n()));
        }
        for &v in &self.order {
            let Some(first) = self.later_neighbors(g, v).min_by_key(|&u| self.position[u]) else {
                continue;
            };
            if let Some(b) = self
                .later_neighbors(g, v)
                .find(|&u| u != first && !g.has_edge(first, u))
            {
                return Err(OrderError::NotPerfect {
                    vertex: v,
                    a: first,
                    b,
                });
            }
        }
        Ok(())
    }
}

/// Lexicographic breadth-first search by partition refinement. Ties between
/// equally labelled vertices go to the smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut blocks: VecDeque<Vec<Vertex>> = VecDeque::new();
    if n > 0 {
        blocks.push_back((0..n).collect());
    }
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(mut front) = blocks.pop_front() {
        let pivot = front.remove(0);
        if !front.is_empty() {
            blocks.push_front(front);
        }
        visited[pivot] = true;
        order.push(pivot);
        let row = g.neighbor_set(pivot);
        let mut refined = VecDeque::with_capacity(blocks.len() + 1);
        for block in blocks.drain(..) {
            let (hit, miss): (Vec<_>, Vec<_>) = block.into_iter().partition(|&v| row.contains(v));
            if !hit.is_empty() {
                refined.push_back(hit);
            }
            if !miss.is_empty() {
                refined.push_back(miss);
            }
        }
        blocks = refined;
    }
    debug_assert!(visited.iter().all(|&b| b));
    order
}

/// Outcome of the chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrder),
    /// An induced `C_k`, `k >= 4`.
    NotChordal(PatternWitness),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Reverse LexBFS order, verified; on failure an induced cycle witness.
pub fn chordality(g: &Graph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    let peo = EliminationOrder::new(order).expect("LexBFS visits every vertex once");
    match peo.check_perfect(g) {
        Ok(()) => Chordality::Chordal(peo),
        Err(OrderError::NotPerfect { vertex, a, b }) => {
            let cycle = cycle_through(g, vertex, a, b)
                .or_else(|| any_long_cycle(g))
                .expect("graph without a perfect elimination order has a long induced cycle");
            Chordality::NotChordal(PatternWitness::new(Pattern::Cycle(cycle.len()), cycle))
        }
        Err(OrderError::NotAPermutation(_)) => unreachable!(),
    }
}

/// Convenience wrapper returning only the verdict.
pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

/// Induced cycle `v, a, ..., b` through the non-adjacent neighbours `a`, `b`
/// of `v`, using a shortest `a`-`b` path that avoids the rest of `N[v]`.
fn cycle_through(g: &Graph, v: Vertex, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
    let mut banned = g.neighbor_set(v).clone();
    banned.insert(v);
    banned.remove(a);
    banned.remove(b);
    let path = shortest_path_avoiding(g, a, b, &banned)?;
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(v);
    cycle.extend(path);
    Some(cycle)
}

fn shortest_path_avoiding(
    g: &Graph,
    from: Vertex,
    to: Vertex,
    banned: &BitSet,
) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX && !banned.contains(w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn any_long_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    for v in g.vertices() {
        let ns = g.neighbors(v);
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::recognition::holes::{for_each_induced_cycle, CycleFilter, Parity};
    use std::ops::ControlFlow;

    fn has_long_induced_cycle_brute(g: &Graph) -> bool {
        let n = g.n();
        (1u32..(1 << n)).any(|mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.len() < 4 {
                return false;
            }
            let sub = g.induced_subgraph(&vs).unwrap().graph;
            sub.vertices().all(|v| sub.degree(v) == 2) && sub.connected_components().len() == 1
        })
    }

    #[test]
    fn trees_are_chordal() {
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        match chordality(&tree) {
            Chordality::Chordal(peo) => assert!(peo.check_perfect(&tree).is_ok()),
            other => panic!("{other:?}"),
        }
        assert!(is_chordal(&path(6)));
        assert!(is_chordal(&star(5)));
    }

    #[test]
    fn c4_is_not_chordal() {
        match chordality(&cycle(4)) {
            Chordality::NotChordal(w) => {
                assert_eq!(w.pattern, Pattern::Cycle(4));
                assert!(w.verify(&cycle(4)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn octahedron_is_not_chordal() {
        let sq = cycle(6).square();
        assert!(has_long_induced_cycle_brute(&sq));
        match chordality(&sq) {
            Chordality::NotChordal(w) => {
                assert_eq!(w.pattern, Pattern::Cycle(4));
                assert!(w.verify(&sq));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_sun_is_chordal_square_is_not() {
        let sun = complete_sun(4);
        assert!(is_chordal(&sun));
        assert!(!is_chordal(&sun.square()));
    }

    #[test]
    fn lex_bfs_tie_break() {
        assert_eq!(lex_bfs(&path(4)), vec![0, 1, 2, 3]);
        assert_eq!(lex_bfs(&Graph::edgeless(3)), vec![0, 1, 2]);
        assert!(lex_bfs(&Graph::edgeless(0)).is_empty());
    }

    #[test]
    fn order_validation() {
        assert_eq!(
            EliminationOrder::new(vec![0, 0]),
            Err(OrderError::NotAPermutation(2))
        );
        let order = EliminationOrder::new(vec![1, 0, 2]).unwrap();
        // P3 0-1-2 eliminating the centre first fails
        assert!(matches!(
            order.check_perfect(&path(3)),
            Err(OrderError::NotPerfect { vertex: 1, .. })
        ));
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let verdict = chordality(&g);
            assert_eq!(
                verdict.is_chordal(),
                !has_long_induced_cycle_brute(&g),
                "{g:?}"
            );
            let mut any = false;
            let _ = for_each_induced_cycle(
                &g,
                CycleFilter {
                    min_len: 4,
                    max_len: usize::MAX,
                    parity: Parity::Any,
                },
                |_| {
                    any = true;
                    ControlFlow::Break(())
                },
            );
            assert_eq!(verdict.is_chordal(), !any);
            if let Chordality::NotChordal(w) = verdict {
                assert!(w.verify(&g), "{w:?} {g:?}");
            }
        }
    }
}
