use crate::graph::{Graph, VertexSet, WeightFunction};
use crate::mwis::{mwis_chordal, mwis_exact, wed_weights};
use crate::recognition::{chordality, find_hole, find_odd_antihole, Chordality, Parity};

use super::{oracle_ed, EdError, EdSolution, SolverPath, SquareDiagnostics};

/// Default largest `n` for which hole and antihole diagnostics are computed.
pub const DEFAULT_DIAGNOSTICS_BUDGET: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMode {
    /// Frank's algorithm when the square is chordal, branch and bound otherwise.
    #[default]
    Auto,
    Force(SolverPath),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub mode: SolveMode,
    /// Hole and odd-antihole checks of the square run only up to this `n`.
    pub diagnostics_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            mode: SolveMode::Auto,
            diagnostics_budget: DEFAULT_DIAGNOSTICS_BUDGET,
        }
    }
}

struct Component {
    vertices: Vec<usize>,
    graph: Graph,
    square: Graph,
    chordality: Chordality,
}

/// Solves (weighted) efficient domination through maximum weight independent
/// sets on the square, one connected component at a time.
///
/// Without user weights the square is weighted by `|N[v]|`; with them by
/// `M * |N[v]| - user(v)` for `M = 1 + sum(user)`. An e.d. exists iff the
/// optimum's `|N[v]|` total equals the component size, and the optimum is
/// then a least-user-weight e.d.
pub fn solve(
    g: &Graph,
    user: Option<&WeightFunction<u64>>,
    opts: &SolveOptions,
) -> Result<EdSolution, EdError> {
    if let Some(w) = user {
        w.clone().for_graph(g)?;
    }

    let components: Vec<Component> = g
        .connected_components()
        .into_iter()
        .map(|vertices| -> Result<Component, EdError> {
            let graph = g.induced_subgraph(&vertices)?.graph;
            let square = graph.square();
            let chordality = chordality(&square);
            Ok(Component {
                vertices,
                graph,
                square,
                chordality,
            })
        })
        .collect::<Result<_, _>>()?;

    let diagnostics = Some(diagnose(g, &components, opts.diagnostics_budget));

    if opts.mode == SolveMode::Force(SolverPath::Oracle) {
        return Ok(EdSolution {
            diagnostics,
            ..oracle_ed(g, user)?
        });
    }

    let mut chosen = Vec::new();
    let mut all_chordal = true;
    let mut exists = true;
    for comp in &components {
        let (part, used_chordal) = solve_component(comp, user, opts.mode)?;
        all_chordal &= used_chordal;
        match part {
            Some(set) => chosen.extend(set.iter().map(|&v| comp.vertices[v])),
            None => {
                exists = false;
                break;
            }
        }
    }

    let path = if all_chordal {
        SolverPath::ChordalSquare
    } else {
        SolverPath::ExactFallback
    };
    if !exists {
        return Ok(EdSolution {
            exists: false,
            set: VertexSet::new(),
            user_weight: None,
            path,
            diagnostics,
        });
    }
    let set = VertexSet::from(chosen);
    Ok(EdSolution {
        exists: true,
        user_weight: user.map(|w| w.sum_over(&set)),
        set,
        path,
        diagnostics,
    })
}

/// Returns the component's e.d. (local ids), if any, and whether Frank's
/// algorithm was used.
fn solve_component(
    comp: &Component,
    user: Option<&WeightFunction<u64>>,
    mode: SolveMode,
) -> Result<(Option<VertexSet>, bool), EdError> {
    let n = comp.graph.n();
    let nbh: WeightFunction<u128> = comp.graph.closed_neighborhood_weights();
    let local_user = match user {
        Some(w) => w.restrict(&comp.vertices).map(u128::from),
        None => WeightFunction::uniform(n, 0),
    };
    let weights = wed_weights(&nbh, &local_user)?.combined;

    let (result, used_chordal) = match (&comp.chordality, mode) {
        (
            Chordality::Chordal(peo),
            SolveMode::Auto | SolveMode::Force(SolverPath::ChordalSquare),
        ) => (mwis_chordal(&comp.square, &weights, peo)?, true),
        (Chordality::NotChordal(w), SolveMode::Force(SolverPath::ChordalSquare)) => {
            return Err(EdError::PathUnavailable {
                path: SolverPath::ChordalSquare,
                reason: format!("square contains an induced {}", w.pattern),
            });
        }
        _ => (mwis_exact(&comp.square, &weights)?, false),
    };

    let covered: u128 = nbh.sum_over(&result.set);
    let found = covered == n as u128;
    Ok((found.then_some(result.set), used_chordal))
}

fn diagnose(g: &Graph, components: &[Component], budget: usize) -> SquareDiagnostics {
    let chordal = components.iter().all(|c| c.chordality.is_chordal());
    if g.n() > budget {
        return SquareDiagnostics {
            chordal,
            hole_free: None,
            odd_antihole_free: None,
        };
    }
    let hole_free = chordal
        || components
            .iter()
            .all(|c| find_hole(&c.square, Parity::Any).is_none());
    // an antihole has no co-edges across components, so check the whole square
    let odd_antihole_free = chordal || find_odd_antihole(&g.square()).is_none();
    SquareDiagnostics {
        chordal,
        hole_free: Some(hole_free),
        odd_antihole_free: Some(odd_antihole_free),
    }
}
