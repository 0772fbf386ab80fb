//! Efficient domination through maximum weight independent sets on graph
//! squares.
//!
//! A vertex set `D` is an efficient dominating set (e.d.) when every vertex
//! is in the closed neighbourhood of exactly one member of `D`. The e.d.s of
//! `G` are exactly the independent sets of `G²` whose `|N[v]|` weights sum to
//! `n`, so the problem reduces to maximum weight independent set on the
//! square. For several `P6`-free classes the square of a graph with an e.d.
//! is chordal or perfect; [`verify`] checks those statements empirically.
//!
//! Weights are generic over [`Weight`]; the aliases below fix the concrete
//! types used by the e.d. pipeline.

mod bitset;
pub mod dimacs;
pub mod ed;
pub mod graph;
pub mod mwis;
pub mod recognition;
pub mod scalar;
pub mod verify;

pub use bitset::BitSet;
pub use dimacs::{parse_dimacs, write_dimacs, GraphFile, ParseError};
pub use ed::{
    oracle_ed, solve, verify_ed, EdError, EdSolution, SolveMode, SolveOptions, SolverPath,
};
pub use graph::{Graph, GraphError, Vertex, VertexSet, WeightFunction};
pub use mwis::{mwis_chordal, mwis_exact, wed_weights, MwisError, MwisMethod, MwisResult};
pub use recognition::{class_membership, ClassReport, GraphClass, Pattern, PatternWitness};
pub use scalar::Weight;
pub use verify::{run_campaign, Corpus, Theorem, TrialConfig, VerificationReport};

/// User-facing vertex weights.
pub type UserWeights = WeightFunction<u64>;
/// Combined weights on the square; wide enough for `M * n * max|N[v]|`.
pub type SquareWeights = WeightFunction<u128>;
pub type MwisResult64 = MwisResult<u64>;
pub type MwisResultF64 = MwisResult<f64>;
