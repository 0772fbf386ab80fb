use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

use super::chordal::{chordality, Chordality};
use super::pattern::{find_occurrence, Pattern, PatternWitness};

/// Graph classes defined by forbidden induced subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    /// (P6, house, hole, domino)-free, tested as (P6, C5, C6, house, domino)-free.
    P6HhdFree,
    P6HouseFree,
    P6BullFree,
    P6Free,
    Chordal,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::P6HhdFree,
        GraphClass::P6HouseFree,
        GraphClass::P6BullFree,
        GraphClass::P6Free,
        GraphClass::Chordal,
    ];

    /// Fixed forbidden patterns; `Chordal` is handled by LexBFS instead.
    pub fn forbidden(self) -> &'static [Pattern] {
        use Pattern::*;
        match self {
            GraphClass::P6HhdFree => &[Path(6), Cycle(5), Cycle(6), House, Domino],
            GraphClass::P6HouseFree => &[Path(6), House],
            GraphClass::P6BullFree => &[Path(6), Bull],
            GraphClass::P6Free => &[Path(6)],
            GraphClass::Chordal => &[],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::P6HhdFree => "p6-hhd-free",
            GraphClass::P6HouseFree => "p6-house-free",
            GraphClass::P6BullFree => "p6-bull-free",
            GraphClass::P6Free => "p6-free",
            GraphClass::Chordal => "chordal",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for GraphClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown graph class `{0}` (expected one of p6-hhd-free, p6-house-free, p6-bull-free, p6-free, chordal)")]
pub struct UnknownClass(pub String);

impl FromStr for GraphClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s
            .to_ascii_lowercase()
            .replace(['_', ' ', '(', ')', ','], "-");
        let key = lowered
            .split('-')
            .filter(|t| !t.is_empty())
            .collect::<Vec<_>>()
            .join("-");
        match key.as_str() {
            "p6-hhd-free" | "p6-hhd" | "hhd" => Ok(GraphClass::P6HhdFree),
            "p6-house-free" | "p6-house" => Ok(GraphClass::P6HouseFree),
            "p6-bull-free" | "p6-bull" => Ok(GraphClass::P6BullFree),
            "p6-free" | "p6" => Ok(GraphClass::P6Free),
            "chordal" => Ok(GraphClass::Chordal),
            _ => Err(UnknownClass(s.to_string())),
        }
    }
}

/// Membership verdict with one witness per violated pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: GraphClass,
    pub member: bool,
    pub violations: Vec<PatternWitness>,
}

pub fn class_membership(g: &Graph, class: GraphClass) -> ClassReport {
    let violations: Vec<PatternWitness> = match class {
        GraphClass::Chordal => match chordality(g) {
            Chordality::Chordal(_) => Vec::new(),
            Chordality::NotChordal(w) => vec![w],
        },
        _ => class
            .forbidden()
            .iter()
            .filter_map(|&p| find_occurrence(g, p))
            .collect(),
    };
    ClassReport {
        class,
        member: violations.is_empty(),
        violations,
    }
}

/// Membership only; stops at the first violation.
pub fn is_member(g: &Graph, class: GraphClass) -> bool {
    match class {
        GraphClass::Chordal => chordality(g).is_chordal(),
        _ => class
            .forbidden()
            .iter()
            .all(|&p| find_occurrence(g, p).is_none()),
    }
}
