//! Efficient domination: the square/MWIS pipeline, an exact-cover oracle and
//! a verifier.

mod oracle;
mod solver;

pub use oracle::all_efficient_dominating_sets;
pub use solver::{solve, SolveMode, SolveOptions, DEFAULT_DIAGNOSTICS_BUDGET};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet, WeightFunction};
use crate::mwis::MwisError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Mwis(#[from] MwisError),
    #[error("forced path {path} unavailable: {reason}")]
    PathUnavailable { path: SolverPath, reason: String },
}

/// Which solver produced an [`EdSolution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverPath {
    /// Frank's algorithm on a chordal square.
    ChordalSquare,
    /// Branch and bound on the square.
    ExactFallback,
    /// Exact cover search, bypassing the square.
    Oracle,
}

impl SolverPath {
    pub fn name(self) -> &'static str {
        match self {
            SolverPath::ChordalSquare => "chordal-square",
            SolverPath::ExactFallback => "exact-fallback",
            SolverPath::Oracle => "oracle",
        }
    }
}

impl fmt::Display for SolverPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown solver path `{0}` (expected chordal-square, exact-fallback or oracle)")]
pub struct UnknownPath(pub String);

impl FromStr for SolverPath {
    type Err = UnknownPath;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chordal-square" | "chordal" => Ok(SolverPath::ChordalSquare),
            "exact-fallback" | "exact" => Ok(SolverPath::ExactFallback),
            "oracle" => Ok(SolverPath::Oracle),
            _ => Err(UnknownPath(s.to_string())),
        }
    }
}

/// Structure of the square observed while solving. The hole and antihole
/// verdicts are `None` when the graph exceeds the verification budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareDiagnostics {
    pub chordal: bool,
    pub hole_free: Option<bool>,
    pub odd_antihole_free: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdSolution {
    pub exists: bool,
    /// The e.d. when one exists, empty otherwise.
    pub set: VertexSet,
    /// Total user weight of `set`, when user weights were supplied.
    pub user_weight: Option<u64>,
    pub path: SolverPath,
    pub diagnostics: Option<SquareDiagnostics>,
}

/// `true` iff every vertex lies in `N[d]` for exactly one `d` in `set`.
pub fn verify_ed(g: &Graph, set: &[Vertex]) -> Result<bool, GraphError> {
    let mut hits = vec![0u32; g.n()];
    for &d in set {
        if d >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: d,
                n: g.n(),
            });
        }
        hits[d] += 1;
        for &u in g.neighbors(d) {
            hits[u] += 1;
        }
    }
    Ok(hits.iter().all(|&h| h == 1))
}

/// Solves by exact cover search alone. With weights, returns a
/// least-weight e.d.
pub fn oracle_ed(g: &Graph, user: Option<&WeightFunction<u64>>) -> Result<EdSolution, EdError> {
    if let Some(w) = user {
        w.clone().for_graph(g)?;
    }
    let best = oracle::best_cover(g, user);
    Ok(match best {
        Some((set, weight)) => EdSolution {
            exists: true,
            set,
            user_weight: user.map(|_| weight),
            path: SolverPath::Oracle,
            diagnostics: None,
        },
        None => EdSolution {
            exists: false,
            set: VertexSet::new(),
            user_weight: None,
            path: SolverPath::Oracle,
            diagnostics: None,
        },
    })
}
