//! Forbidden induced subgraph detection, chordality and class membership.

pub mod chordal;
pub mod classes;
pub mod holes;
pub mod pattern;

pub use chordal::{chordality, is_chordal, lex_bfs, Chordality, EliminationOrder, OrderError};
pub use classes::{class_membership, is_member, ClassReport, GraphClass, UnknownClass};
pub use holes::{
    find_hole, find_induced_cycle, find_odd_antihole, for_each_induced_cycle, is_perfect_desk,
    odd_antiholes, CycleFilter, Parity,
};
pub use pattern::{
    find_induced_path, find_occurrence, for_each_occurrence, Pattern, PatternWitness, C4, P6,
};

use crate::graph::Graph;

/// First induced house, domino, bull or `C_4`.
pub fn find_pattern(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    find_occurrence(g, pattern)
}
