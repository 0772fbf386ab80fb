//! Per-graph checks of the structural statements about squares of graphs
//! with an e.d.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::dimacs::write_dimacs;
use crate::ed::{all_efficient_dominating_sets, oracle_ed, verify_ed};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{
    chordality, find_hole, for_each_induced_cycle, is_member, is_perfect_desk, odd_antiholes,
    Chordality, CycleFilter, GraphClass, Parity, PatternWitness,
};

use super::VerifyError;

/// Statements that can be checked on a single graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// (P6, HHD)-free with an e.d. => square chordal.
    ChordalSquare,
    /// P6-free with an e.d. => square hole-free.
    HoleFreeSquare,
    /// P6-free with an e.d. => no odd antihole of the square meets any e.d.
    AntiholesAvoidEd,
    /// (P6, house)-free with an e.d. => every `C_4` of the square avoiding
    /// `D` is dominated by only two `D`-vertices.
    C4TwoDominators,
    /// (P6, house)-free with an e.d. => square perfect.
    PerfectHouseFree,
    /// (P6, bull)-free with an e.d. => square perfect.
    PerfectBullFree,
    /// P6-free with an e.d. => square perfect (open).
    PerfectP6Free,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::ChordalSquare,
        Theorem::HoleFreeSquare,
        Theorem::AntiholesAvoidEd,
        Theorem::C4TwoDominators,
        Theorem::PerfectHouseFree,
        Theorem::PerfectBullFree,
        Theorem::PerfectP6Free,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::ChordalSquare => "chordal-square",
            Theorem::HoleFreeSquare => "hole-free-square",
            Theorem::AntiholesAvoidEd => "antiholes-avoid-ed",
            Theorem::C4TwoDominators => "c4-two-dominators",
            Theorem::PerfectHouseFree => "perfect-house-free",
            Theorem::PerfectBullFree => "perfect-bull-free",
            Theorem::PerfectP6Free => "perfect-p6-free",
        }
    }

    /// Short code accepted on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Theorem::ChordalSquare => "T1",
            Theorem::HoleFreeSquare => "T2",
            Theorem::AntiholesAvoidEd => "T3",
            Theorem::C4TwoDominators => "C4-dom",
            Theorem::PerfectHouseFree => "T4",
            Theorem::PerfectBullFree => "T5",
            Theorem::PerfectP6Free => "CONJ",
        }
    }

    pub fn hypothesis(self) -> GraphClass {
        match self {
            Theorem::ChordalSquare => GraphClass::P6HhdFree,
            Theorem::HoleFreeSquare | Theorem::AntiholesAvoidEd | Theorem::PerfectP6Free => {
                GraphClass::P6Free
            }
            Theorem::C4TwoDominators | Theorem::PerfectHouseFree => GraphClass::P6HouseFree,
            Theorem::PerfectBullFree => GraphClass::P6BullFree,
        }
    }

    /// Whether the check iterates over every e.d. of the graph.
    pub fn needs_all_eds(self) -> bool {
        matches!(self, Theorem::AntiholesAvoidEd | Theorem::C4TwoDominators)
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::ChordalSquare => "(P6,HHD)-free with e.d. => G^2 chordal",
            Theorem::HoleFreeSquare => "P6-free with e.d. => G^2 has no induced C_k, k >= 5",
            Theorem::AntiholesAvoidEd => "P6-free with e.d. D => no odd antihole of G^2 meets D",
            Theorem::C4TwoDominators => {
                "(P6,house)-free with e.d. D => C4 of G^2 avoiding D has two D-dominators"
            }
            Theorem::PerfectHouseFree => "(P6,house)-free with e.d. => G^2 perfect",
            Theorem::PerfectBullFree => "(P6,bull)-free with e.d. => G^2 perfect",
            Theorem::PerfectP6Free => "P6-free with e.d. => G^2 perfect",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| {
                t.id().eq_ignore_ascii_case(s)
                    || t.code().eq_ignore_ascii_case(s)
                    || t.code().replace('-', "").eq_ignore_ascii_case(s)
            })
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

/// Size limits for a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckLimits {
    /// Largest `n` for hole and antihole searches.
    pub budget: usize,
    /// Largest `n` for which all e.d.s are enumerated.
    pub enumerate_cap: usize,
}

pub const DEFAULT_BUDGET: usize = 30;
pub const ENUMERATE_CAP: usize = 16;

impl Default for CheckLimits {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            enumerate_cap: ENUMERATE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VacuousReason {
    NotInClass,
    NoEd,
}

/// A violated statement with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub theorem: Theorem,
    pub trial: u64,
    pub n: usize,
    /// 0-based edge list.
    pub edges: Vec<(Vertex, Vertex)>,
    /// The graph in DIMACS form (1-based).
    pub dimacs: String,
    /// The e.d. the violation was found with.
    pub ed: VertexSet,
    /// Offending structure in the square.
    pub witness: PatternWitness,
    pub detail: String,
}

impl Counterexample {
    fn new(
        theorem: Theorem,
        g: &Graph,
        ed: VertexSet,
        witness: PatternWitness,
        detail: String,
    ) -> Self {
        Self {
            theorem,
            trial: 0,
            n: g.n(),
            edges: g.edges().collect(),
            dimacs: write_dimacs(g, None),
            ed,
            witness,
            detail,
        }
    }

    /// Rebuilds the graph and re-checks every ingredient: class membership,
    /// the e.d., the witness in the square, and the theorem-specific
    /// violation.
    pub fn recheck(&self) -> bool {
        let Ok(g) = Graph::from_edges(self.n, self.edges.iter().copied()) else {
            return false;
        };
        if !is_member(&g, self.theorem.hypothesis()) || !verify_ed(&g, &self.ed).unwrap_or(false) {
            return false;
        }
        let square = g.square();
        if !self.witness.verify(&square) {
            return false;
        }
        let w = &self.witness;
        match self.theorem {
            Theorem::ChordalSquare => {
                w.pattern.order() >= 4 && matches!(w.pattern, crate::Pattern::Cycle(_))
            }
            Theorem::HoleFreeSquare => {
                w.pattern.order() >= 5 && matches!(w.pattern, crate::Pattern::Cycle(_))
            }
            Theorem::AntiholesAvoidEd => {
                w.pattern.is_odd_antihole() && w.vertices.iter().any(|&v| self.ed.contains(v))
            }
            Theorem::C4TwoDominators => {
                w.pattern == crate::Pattern::Cycle(4)
                    && w.vertices.iter().all(|&v| !self.ed.contains(v))
                    && distinct_dominators(&g, &self.ed, &w.vertices) > 2
            }
            Theorem::PerfectHouseFree | Theorem::PerfectBullFree | Theorem::PerfectP6Free => {
                w.pattern.is_odd_hole() || w.pattern.is_odd_antihole()
            }
        }
    }
}

/// Outcome of one trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialVerdict {
    /// The conclusion held. `informative` is false when it held for size
    /// reasons alone (no odd hole below 5 vertices), or when the square had
    /// no odd antihole / avoiding `C_4` to test against.
    Held {
        informative: bool,
    },
    Vacuous(VacuousReason),
    Counterexample(Box<Counterexample>),
    /// Graph exceeded a size limit; never silently counted as held.
    Skipped(String),
}

fn dominator_of(g: &Graph, ed: &VertexSet, x: Vertex) -> Option<Vertex> {
    if ed.contains(x) {
        return Some(x);
    }
    g.neighbors(x).iter().copied().find(|&d| ed.contains(d))
}

fn distinct_dominators(g: &Graph, ed: &VertexSet, vertices: &[Vertex]) -> usize {
    let doms: VertexSet = vertices
        .iter()
        .filter_map(|&x| dominator_of(g, ed, x))
        .collect();
    doms.len()
}

/// Evaluates `theorem` on `g`.
pub fn check_theorem(g: &Graph, theorem: Theorem, limits: &CheckLimits) -> TrialVerdict {
    if g.n() > limits.budget {
        return TrialVerdict::Skipped(format!(
            "n = {} exceeds verification budget {}",
            g.n(),
            limits.budget
        ));
    }
    if theorem.needs_all_eds() && g.n() > limits.enumerate_cap {
        return TrialVerdict::Skipped(format!(
            "n = {} exceeds e.d. enumeration cap {}",
            g.n(),
            limits.enumerate_cap
        ));
    }
    if !is_member(g, theorem.hypothesis()) {
        return TrialVerdict::Vacuous(VacuousReason::NotInClass);
    }
    let Some(ed) = oracle_ed(g, None).ok().filter(|s| s.exists).map(|s| s.set) else {
        return TrialVerdict::Vacuous(VacuousReason::NoEd);
    };
    let square = g.square();
    let fail = |witness: PatternWitness, ed: VertexSet, detail: String| {
        TrialVerdict::Counterexample(Box::new(Counterexample::new(
            theorem, g, ed, witness, detail,
        )))
    };

    match theorem {
        Theorem::ChordalSquare => match chordality(&square) {
            Chordality::Chordal(_) => TrialVerdict::Held { informative: true },
            Chordality::NotChordal(w) => fail(w, ed, "square is not chordal".into()),
        },
        Theorem::HoleFreeSquare => match find_hole(&square, Parity::Any) {
            None => TrialVerdict::Held { informative: true },
            Some(w) => fail(w, ed, "square contains a hole".into()),
        },
        Theorem::PerfectHouseFree | Theorem::PerfectBullFree | Theorem::PerfectP6Free => {
            match is_perfect_desk(&square) {
                // C5 is the smallest odd hole
                (true, _) => TrialVerdict::Held {
                    informative: g.n() >= 5,
                },
                (false, w) => fail(
                    w.expect("imperfect graphs carry a witness"),
                    ed,
                    "square is not perfect".into(),
                ),
            }
        }
        Theorem::AntiholesAvoidEd => {
            let antiholes = odd_antiholes(&square);
            if antiholes.is_empty() {
                return TrialVerdict::Held { informative: false };
            }
            for d in all_efficient_dominating_sets(g, None) {
                if let Some(hole) = antiholes
                    .iter()
                    .find(|h| h.vertices.iter().any(|&v| d.contains(v)))
                {
                    return fail(
                        hole.clone(),
                        d,
                        "odd antihole contains an e.d. vertex".into(),
                    );
                }
            }
            TrialVerdict::Held { informative: true }
        }
        Theorem::C4TwoDominators => {
            let mut informative = false;
            for d in all_efficient_dominating_sets(g, None) {
                let mut bad = None;
                let _ = for_each_induced_cycle(&square, CycleFilter::exactly(4), |c| {
                    if c.iter().any(|&v| d.contains(v)) {
                        return ControlFlow::Continue(());
                    }
                    informative = true;
                    let count = distinct_dominators(g, &d, c);
                    if count > 2 {
                        bad = Some((c.to_vec(), count));
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if let Some((c4, count)) = bad {
                    return fail(
                        PatternWitness::new(crate::Pattern::Cycle(4), c4),
                        d,
                        format!("C4 dominated by {count} e.d. vertices"),
                    );
                }
            }
            TrialVerdict::Held { informative }
        }
    }
}
