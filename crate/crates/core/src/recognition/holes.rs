//! Induced cycle search: holes, odd holes and odd antiholes.

use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

use super::pattern::{Pattern, PatternWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
}

impl Parity {
    fn accepts(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Length and parity constraints for [`for_each_induced_cycle`].
#[derive(Debug, Clone, Copy)]
pub struct CycleFilter {
    pub min_len: usize,
    pub max_len: usize,
    pub parity: Parity,
}

impl CycleFilter {
    pub fn holes(parity: Parity) -> Self {
        Self {
            min_len: 5,
            max_len: usize::MAX,
            parity,
        }
    }

    pub fn exactly(len: usize) -> Self {
        Self {
            min_len: len,
            max_len: len,
            parity: Parity::Any,
        }
    }
}

/// Visits every induced cycle of `g` allowed by `filter` exactly once, as
/// a vertex sequence in cycle order. The sequence starts at the cycle's
/// smallest vertex and its second vertex is smaller than its last one.
///
/// Induced paths are grown from the start vertex through larger vertices
/// only; an extension is dropped as soon as it sees a non-endpoint of the
/// path, and a cycle closes when the new vertex sees the start.
pub fn for_each_induced_cycle<F>(g: &Graph, filter: CycleFilter, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let min_len = filter.min_len.max(3);
    if filter.max_len < min_len {
        return ControlFlow::Continue(());
    }
    let mut search = CycleSearch {
        g,
        min_len,
        max_len: filter.max_len.min(g.n()),
        parity: filter.parity,
        path: Vec::new(),
        on_path: BitSet::new(g.n()),
        // vertices adjacent to some interior path vertex, with multiplicity
        blocked: vec![0u32; g.n()],
    };
    for s in g.vertices() {
        if g.n() - s < min_len {
            break;
        }
        for &t in g.neighbors(s) {
            if t < s {
                continue;
            }
            search.path.clear();
            search.path.extend([s, t]);
            search.on_path.insert(s);
            search.on_path.insert(t);
            let flow = search.grow(&mut visit);
            search.on_path.remove(s);
            search.on_path.remove(t);
            flow?;
        }
    }
    ControlFlow::Continue(())
}

struct CycleSearch<'a> {
    g: &'a Graph,
    min_len: usize,
    max_len: usize,
    parity: Parity,
    path: Vec<Vertex>,
    on_path: BitSet,
    blocked: Vec<u32>,
}

impl CycleSearch<'_> {
    fn grow<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let g = self.g;
        let s = self.path[0];
        let tail = *self.path.last().unwrap();
        let len = self.path.len();
        for &x in g.neighbors(tail) {
            if x <= s || self.on_path.contains(x) || self.blocked[x] > 0 {
                continue;
            }
            if g.has_edge(x, s) {
                let cycle_len = len + 1;
                if cycle_len >= self.min_len
                    && cycle_len <= self.max_len
                    && self.parity.accepts(cycle_len)
                    && self.path[1] < x
                {
                    self.path.push(x);
                    let flow = visit(&self.path);
                    self.path.pop();
                    flow?;
                }
                continue;
            }
            if len + 1 >= self.max_len {
                continue;
            }
            // tail becomes interior once x is appended
            for &w in g.neighbors(tail) {
                self.blocked[w] += 1;
            }
            self.path.push(x);
            self.on_path.insert(x);
            let flow = self.grow(visit);
            self.on_path.remove(x);
            self.path.pop();
            for &w in g.neighbors(tail) {
                self.blocked[w] -= 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// First induced cycle allowed by `filter`, as a `Cycle` witness.
pub fn find_induced_cycle(g: &Graph, filter: CycleFilter) -> Option<PatternWitness> {
    let mut found = None;
    let _ = for_each_induced_cycle(g, filter, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found.map(|c| PatternWitness::new(Pattern::Cycle(c.len()), c))
}

/// An induced cycle of length at least 5 (odd length when `parity` is odd).
pub fn find_hole(g: &Graph, parity: Parity) -> Option<PatternWitness> {
    find_induced_cycle(g, CycleFilter::holes(parity))
}

/// Vertices inducing the complement of an odd cycle of length at least 7.
/// `C_5` is self-complementary and is left to the odd-hole search.
pub fn find_odd_antihole(g: &Graph) -> Option<PatternWitness> {
    if g.n() < 7 {
        return None;
    }
    let co = g.complement();
    find_induced_cycle(&co, antihole_filter())
        .map(|w| PatternWitness::new(Pattern::Antihole(w.vertices.len()), w.vertices))
}

fn antihole_filter() -> CycleFilter {
    CycleFilter {
        min_len: 7,
        max_len: usize::MAX,
        parity: Parity::Odd,
    }
}

/// All odd antiholes of `g`, each once.
pub fn odd_antiholes(g: &Graph) -> Vec<PatternWitness> {
    if g.n() < 7 {
        return Vec::new();
    }
    let co = g.complement();
    let mut all = Vec::new();
    let _ = for_each_induced_cycle(&co, antihole_filter(), |c| {
        all.push(PatternWitness::new(Pattern::Antihole(c.len()), c.to_vec()));
        ControlFlow::Continue(())
    });
    all
}

/// Perfection test via forbidden odd holes and odd antiholes. Exponential,
/// intended for small graphs. Returns the violating witness when imperfect.
pub fn is_perfect_desk(g: &Graph) -> (bool, Option<PatternWitness>) {
    if let Some(w) = find_hole(g, Parity::Odd) {
        return (false, Some(w));
    }
    if let Some(w) = find_odd_antihole(g) {
        return (false, Some(w));
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// All induced cycles by subset enumeration: a subset induces a cycle iff
    /// it is connected and 2-regular.
    fn brute_force_cycle_lengths(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut lens = Vec::new();
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.len() < 3 {
                continue;
            }
            let sub = g.induced_subgraph(&vs).unwrap().graph;
            if sub.vertices().all(|v| sub.degree(v) == 2) && sub.connected_components().len() == 1 {
                lens.push(vs.len());
            }
        }
        lens.sort_unstable();
        lens
    }

    fn search_cycle_lengths(g: &Graph) -> Vec<usize> {
        let mut lens = Vec::new();
        let _ = for_each_induced_cycle(
            g,
            CycleFilter {
                min_len: 3,
                max_len: usize::MAX,
                parity: Parity::Any,
            },
            |c| {
                assert!(Pattern::Cycle(c.len()).is_realized_by(g, c) || c.len() == 3);
                lens.push(c.len());
                ControlFlow::Continue(())
            },
        );
        lens.sort_unstable();
        lens
    }

    #[test]
    fn c5_is_a_hole() {
        let w = find_hole(&cycle(5), Parity::Any).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert!(w.verify(&cycle(5)));
    }

    #[test]
    fn octahedron_has_no_hole() {
        let sq = cycle(6).square();
        assert!(brute_force_cycle_lengths(&sq).iter().all(|&l| l < 5));
        assert!(find_hole(&sq, Parity::Any).is_none());
    }

    #[test]
    fn c6_has_no_odd_hole() {
        assert!(find_hole(&cycle(6), Parity::Odd).is_none());
        assert!(find_hole(&cycle(6), Parity::Any).is_some());
    }

    #[test]
    fn antihole_examples() {
        let anti = cycle(7).complement();
        let w = find_odd_antihole(&anti).unwrap();
        assert_eq!(w.pattern, Pattern::Antihole(7));
        assert!(w.verify(&anti));
        assert!(find_odd_antihole(&complete(6)).is_none());
        assert!(find_odd_antihole(&cycle(6).square()).is_none());
        assert!(find_odd_antihole(&cycle(9).complement()).is_some());
        assert_eq!(odd_antiholes(&anti).len(), 1);
    }

    #[test]
    fn perfection_examples() {
        let (ok, w) = is_perfect_desk(&cycle(5));
        assert!(!ok);
        assert_eq!(w.unwrap().pattern, Pattern::Cycle(5));
        assert!(is_perfect_desk(&cycle(8)).0);
        assert!(is_perfect_desk(&star(4)).0);
        assert!(is_perfect_desk(&cycle(6).square()).0);
        let (ok, w) = is_perfect_desk(&cycle(7).complement());
        assert!(!ok);
        assert!(w.unwrap().pattern.is_odd_antihole());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(3..=10);
            let p: f64 = rng.gen_range(0.15..0.7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(
                search_cycle_lengths(&g),
                brute_force_cycle_lengths(&g),
                "{g:?}"
            );
        }
    }
}
