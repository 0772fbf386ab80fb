//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::scalar::Weight;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("weight function has {got} entries, graph has {expected} vertices")]
    WeightLength { expected: usize, got: usize },
    #[error("negative weight on vertex {0}")]
    NegativeWeight(Vertex),
}

/// Simple undirected graph. Neighbour lists are sorted ascending and the
/// graph never changes after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    rows: Vec<BitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges_counting(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], additionally returning how many duplicate
    /// edges were dropped.
    pub fn from_edges_counting<I>(n: usize, edges: I) -> Result<(Self, usize), GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![BitSet::new(n); n];
        let mut duplicates = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if rows[u].contains(v) {
                duplicates += 1;
                continue;
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok((Self::from_rows(rows), duplicates))
    }

    fn from_rows(rows: Vec<BitSet>) -> Self {
        let adj: Vec<Vec<Vertex>> = rows.iter().map(|r| r.iter().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adj, rows, m }
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_rows(vec![BitSet::new(n); n])
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Open neighbourhood as a bit row.
    #[inline]
    pub fn neighbor_set(&self, v: Vertex) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]`: `v` together with its neighbours, ascending.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut set = self.adj[v].clone();
        let pos = set.partition_point(|&x| x < v);
        set.insert(pos, v);
        VertexSet(set)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// The square: same vertices, `uv` an edge iff `1 <= d(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let rows = (0..self.n())
            .map(|v| {
                let mut row = self.rows[v].clone();
                for &u in &self.adj[v] {
                    for &w in &self.adj[u] {
                        row.insert(w);
                    }
                }
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut row = BitSet::full(n);
                row.difference_with(&self.rows[v]);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Subgraph induced by `vertices`. New id `i` corresponds to the `i`-th
    /// smallest member of the set.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let members = VertexSet::from_iter(vertices.iter().copied());
        let mut to_new = vec![None; self.n()];
        for (i, &v) in members.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let k = members.len();
        let rows = members
            .iter()
            .map(|&v| {
                let mut row = BitSet::new(k);
                for &w in &self.adj[v] {
                    if let Some(j) = to_new[w] {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_rows(rows),
            to_old: members.into_vec(),
            to_new,
        })
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut components = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_independent_set(&self, set: &[Vertex]) -> Result<bool, GraphError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v))))
    }

    /// Weights `|N[v]| = deg(v) + 1`.
    pub fn closed_neighborhood_weights<W: Weight>(&self) -> WeightFunction<W> {
        WeightFunction(
            self.vertices()
                .map(|v| W::from_count(self.degree(v) + 1))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Result of [`Graph::induced_subgraph`] together with the id maps.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// new id -> original id
    pub to_old: Vec<Vertex>,
    /// original id -> new id
    pub to_new: Vec<Option<Vertex>>,
}

/// Strictly increasing sequence of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    /// Ids shifted to 1-based numbering.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl std::ops::Deref for VertexSet {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

/// Nonnegative per-vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction<W>(Vec<W>);

impl<W: Weight> WeightFunction<W> {
    pub fn new(weights: Vec<W>) -> Result<Self, GraphError> {
        if let Some(v) = weights.iter().position(|w| *w < W::zero()) {
            return Err(GraphError::NegativeWeight(v));
        }
        Ok(Self(weights))
    }

    pub fn uniform(n: usize, w: W) -> Self {
        Self(vec![w; n])
    }

    /// Checks the length against a graph.
    pub fn for_graph(self, g: &Graph) -> Result<Self, GraphError> {
        if self.0.len() != g.n() {
            return Err(GraphError::WeightLength {
                expected: g.n(),
                got: self.0.len(),
            });
        }
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> W {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[W] {
        &self.0
    }

    pub fn total(&self) -> W {
        self.0.iter().copied().sum()
    }

    pub fn sum_over(&self, set: &[Vertex]) -> W {
        set.iter().map(|&v| self.0[v]).sum()
    }

    /// Restriction to `vertices`, in the given order.
    pub fn restrict(&self, vertices: &[Vertex]) -> Self {
        Self(vertices.iter().map(|&v| self.0[v]).collect())
    }

    pub fn map<U: Weight>(&self, f: impl Fn(W) -> U) -> WeightFunction<U> {
        WeightFunction(self.0.iter().map(|&w| f(w)).collect())
    }
}

/// Small named graphs used throughout tests, examples and the CLI.
pub mod named {
    use super::{Graph, Vertex};

    fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).expect("valid named graph")
    }

    /// `P_n`: 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        build(n, &edges)
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &edges)
    }

    /// Complement of `P_5` on 0..5 (the P5 order is 0-1-2-3-4).
    pub fn house() -> Graph {
        path(5).complement()
    }

    /// `P_5` 0-1-2-3-4 plus vertex 5 adjacent to 0, 2 and 4.
    pub fn domino() -> Graph {
        build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 2), (5, 4)])
    }

    /// Triangle 1, 2, 4 with pendants 0 (on 1) and 3 (on 2).
    pub fn bull() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)])
    }

    /// Complete `k`-sun: clique on `0..k`, and sun vertex `k + i` adjacent to
    /// clique vertices `i` and `(i + 1) % k`.
    pub fn complete_sun(k: usize) -> Graph {
        assert!(k >= 3);
        let mut edges: Vec<_> = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        for i in 0..k {
            edges.push((k + i, i));
            edges.push((k + i, (i + 1) % k));
        }
        build(2 * k, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use proptest::prelude::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn from_edges_builds_p3() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(edge_set(&g), vec![(0, 1), (1, 2)]);
        assert_eq!(g, path(3));
    }

    #[test]
    fn from_edges_k1() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let (g, dups) = Graph::from_edges_counting(4, [(0, 1), (1, 0), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g, path(4));
        assert_eq!(dups, 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn distances() {
        let p4 = path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(1, 1).unwrap(), Some(0));
        assert_eq!(Graph::edgeless(2).distance(0, 1).unwrap(), None);
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn square_of_p4() {
        let sq = path(4).square();
        assert_eq!(edge_set(&sq), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(Graph::edgeless(1).square(), Graph::edgeless(1));
    }

    #[test]
    fn square_of_complete_4_sun_has_c4_on_sun_vertices() {
        let sun = complete_sun(4);
        let sq = sun.square();
        let sub = sq.induced_subgraph(&[4, 5, 6, 7]).unwrap().graph;
        assert_eq!(sub, cycle(4));
        // the sun itself has no edges among those vertices
        assert_eq!(sun.induced_subgraph(&[4, 5, 6, 7]).unwrap().graph.m(), 0);
    }

    #[test]
    fn closed_neighborhood_weights_examples() {
        let w: WeightFunction<u64> = path(4).closed_neighborhood_weights();
        assert_eq!(w.as_slice(), &[2, 3, 3, 2]);
        let w: WeightFunction<u64> = Graph::edgeless(1).closed_neighborhood_weights();
        assert_eq!(w.as_slice(), &[1]);
        let w: WeightFunction<u32> = cycle(6).closed_neighborhood_weights();
        assert_eq!(w.as_slice(), &[3; 6]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(3).complement(), Graph::edgeless(3));
        assert_eq!(path(4).complement().complement(), path(4));
        // house: C4 1-3-0-4-1 ... seen as complement of P5
        let house = house();
        assert_eq!(house.m(), 6);
        assert_eq!(house.complement(), path(5));
    }

    #[test]
    fn induced_subgraph_examples() {
        assert_eq!(path(4).induced_subgraph(&[0, 1, 2]).unwrap().graph, path(3));
        assert_eq!(
            path(4).induced_subgraph(&[0, 3]).unwrap().graph,
            Graph::edgeless(2)
        );
        let sub = cycle(6).induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(sub.graph, path(5));
        assert_eq!(sub.to_old, vec![0, 1, 2, 3, 4]);
        assert_eq!(sub.to_new[5], None);
        assert!(path(4).induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(path(4).connected_components().len(), 1);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let sizes: Vec<_> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
        assert_eq!(
            Graph::edgeless(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn independence() {
        let p4 = path(4);
        assert!(p4.is_independent_set(&[0, 3]).unwrap());
        assert!(!p4.is_independent_set(&[0, 1]).unwrap());
        assert!(p4.is_independent_set(&[]).unwrap());
        assert!(p4.is_independent_set(&[9]).is_err());
    }

    #[test]
    fn vertex_set_normalises() {
        let s = VertexSet::from(vec![3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.one_based(), vec![2, 3, 4]);
        assert!(s.contains(2));
    }

    #[test]
    fn weight_function_checks() {
        assert_eq!(
            WeightFunction::new(vec![1i64, -2]),
            Err(GraphError::NegativeWeight(1))
        );
        let w = WeightFunction::new(vec![1u64, 2]).unwrap();
        assert!(w.clone().for_graph(&path(3)).is_err());
        assert_eq!(w.total(), 3);
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn square_matches_bfs_distance(g in arb_graph(12)) {
            let sq = g.square();
            for u in g.vertices() {
                let dist = g.bfs_distances(u);
                for v in g.vertices() {
                    let close = u != v && matches!(dist[v], Some(d) if d <= 2);
                    prop_assert_eq!(sq.has_edge(u, v), close);
                }
            }
            for (u, v) in g.edges() {
                prop_assert!(sq.has_edge(u, v));
            }
        }

        #[test]
        fn complement_is_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn square_independent_sets_pack_closed_neighborhoods(g in arb_graph(9)) {
            // every independent set of the square has pairwise disjoint N[v]
            let sq = g.square();
            let n = g.n();
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if !sq.is_independent_set(&set).unwrap() {
                    continue;
                }
                let total: usize = set.iter().map(|&v| g.degree(v) + 1).sum();
                prop_assert!(total <= n);
                let union: VertexSet = set.iter().flat_map(|&v| g.closed_neighborhood(v).into_vec()).collect();
                prop_assert_eq!(union.len(), total);
            }
        }
    }
}
