//! Fixed forbidden patterns and a backtracking induced-subgraph matcher.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

/// A named induced subgraph. Every pattern fixes a vertex order; witness
/// tuples are interpreted in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Chordless path, vertices in path order.
    Path(usize),
    /// Chordless cycle `C_k`, `k >= 4`, vertices in cycle order. `C_4`, and
    /// holes for `k >= 5`.
    Cycle(usize),
    /// Complement of `C_k`, vertices in the order of the complementary cycle.
    Antihole(usize),
    /// Complement of the `P_5` `x0 x1 x2 x3 x4`.
    House,
    /// `P_5` `x0..x4` plus `y` (position 5) adjacent to `x0`, `x2`, `x4`.
    Domino,
    /// Path `p a b q` plus `t` (position 4) adjacent to `a` and `b`.
    Bull,
}

pub const P6: Pattern = Pattern::Path(6);
pub const C4: Pattern = Pattern::Cycle(4);

impl Pattern {
    /// Number of vertices.
    pub fn order(self) -> usize {
        match self {
            Pattern::Path(k) | Pattern::Cycle(k) | Pattern::Antihole(k) => k,
            Pattern::House | Pattern::Bull => 5,
            Pattern::Domino => 6,
        }
    }

    /// Adjacency of positions `i != j` in the pattern.
    pub fn adjacent(self, i: usize, j: usize) -> bool {
        let (lo, hi) = (i.min(j), i.max(j));
        match self {
            Pattern::Path(_) => hi - lo == 1,
            Pattern::Cycle(k) => hi - lo == 1 || (lo == 0 && hi == k - 1),
            Pattern::Antihole(k) => !(hi - lo == 1 || (lo == 0 && hi == k - 1)),
            Pattern::House => hi - lo >= 2,
            Pattern::Domino => matches!(
                (lo, hi),
                (0, 1) | (1, 2) | (2, 3) | (3, 4) | (0, 5) | (2, 5) | (4, 5)
            ),
            Pattern::Bull => matches!((lo, hi), (0, 1) | (1, 2) | (2, 3) | (1, 4) | (2, 4)),
        }
    }

    /// `true` when the vertices, in order, induce exactly this pattern.
    pub fn is_realized_by(self, g: &Graph, witness: &[Vertex]) -> bool {
        let k = self.order();
        if witness.len() != k || witness.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                if witness[i] == witness[j]
                    || g.has_edge(witness[i], witness[j]) != self.adjacent(i, j)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `true` for odd holes (`C_k`, odd `k >= 5`).
    pub fn is_odd_hole(self) -> bool {
        matches!(self, Pattern::Cycle(k) if k >= 5 && k % 2 == 1)
    }

    /// `true` for odd antiholes (complement of `C_k`, odd `k >= 7`).
    pub fn is_odd_antihole(self) -> bool {
        matches!(self, Pattern::Antihole(k) if k >= 7 && k % 2 == 1)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(k) => write!(f, "P{k}"),
            Pattern::Cycle(k) => write!(f, "C{k}"),
            Pattern::Antihole(k) => write!(f, "co-C{k}"),
            Pattern::House => f.write_str("house"),
            Pattern::Domino => f.write_str("domino"),
            Pattern::Bull => f.write_str("bull"),
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An occurrence of a pattern: `vertices[i]` plays pattern position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub vertices: Vec<Vertex>,
}

impl PatternWitness {
    pub fn new(pattern: Pattern, vertices: Vec<Vertex>) -> Self {
        Self { pattern, vertices }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        self.pattern.is_realized_by(g, &self.vertices)
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.pattern)?;
        for v in &self.vertices {
            write!(f, " {}", v + 1)?;
        }
        Ok(())
    }
}

/// Calls `visit` on every induced occurrence of `pattern` as an ordered
/// tuple, in ascending lexicographic order of the tuple. Automorphic images
/// are reported separately.
pub fn for_each_occurrence<F>(g: &Graph, pattern: Pattern, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let k = pattern.order();
    if k == 0 || k > g.n() {
        return ControlFlow::Continue(());
    }
    // earliest pattern neighbour of each position, used to draw candidates
    let anchors: Vec<Option<usize>> = (0..k)
        .map(|i| (0..i).find(|&j| pattern.adjacent(i, j)))
        .collect();
    let mut matcher = Matcher {
        g,
        pattern,
        anchors,
        assigned: Vec::with_capacity(k),
        used: BitSet::new(g.n()),
    };
    matcher.extend(&mut visit)
}

struct Matcher<'a> {
    g: &'a Graph,
    pattern: Pattern,
    anchors: Vec<Option<usize>>,
    assigned: Vec<Vertex>,
    used: BitSet,
}

impl Matcher<'_> {
    fn extend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let i = self.assigned.len();
        if i == self.pattern.order() {
            return visit(&self.assigned);
        }
        let g = self.g;
        let candidates: Box<dyn Iterator<Item = Vertex>> = match self.anchors[i] {
            Some(j) => Box::new(g.neighbors(self.assigned[j]).iter().copied()),
            None => Box::new(g.vertices()),
        };
        for x in candidates {
            if self.used.contains(x) {
                continue;
            }
            let fits = self
                .assigned
                .iter()
                .enumerate()
                .all(|(j, &y)| g.has_edge(x, y) == self.pattern.adjacent(i, j));
            if !fits {
                continue;
            }
            self.assigned.push(x);
            self.used.insert(x);
            let flow = self.extend(visit);
            self.used.remove(x);
            self.assigned.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// First induced occurrence of `pattern` in lexicographic order.
pub fn find_occurrence(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    let mut found = None;
    let _ = for_each_occurrence(g, pattern, |tuple| {
        found = Some(tuple.to_vec());
        ControlFlow::Break(())
    });
    found.map(|vertices| PatternWitness::new(pattern, vertices))
}

/// Lexicographically least induced `P_k` (vertices in path order).
pub fn find_induced_path(g: &Graph, k: usize) -> Option<PatternWitness> {
    find_occurrence(g, Pattern::Path(k))
}
