//! Maximum weight independent set solvers.

mod chordal;
mod exact;
mod wed;

pub use chordal::mwis_chordal;
pub use exact::mwis_exact;
pub use wed::{wed_weights, WedWeights};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, WeightFunction};
use crate::recognition::OrderError;
use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MwisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("weight arithmetic overflow")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MwisMethod {
    ChordalGreedy,
    BranchAndBound,
}

/// An independent set together with its weight.
#[derive(Debug, Clone, PartialEq)]
pub struct MwisResult<W> {
    pub set: VertexSet,
    pub value: W,
    pub method: MwisMethod,
}

impl<W: Weight> MwisResult<W> {
    /// Re-checks independence and the stated value.
    pub fn is_consistent(&self, g: &Graph, w: &WeightFunction<W>) -> bool {
        g.is_independent_set(&self.set).unwrap_or(false) && w.sum_over(&self.set) == self.value
    }
}

fn check_len<W: Weight>(g: &Graph, w: &WeightFunction<W>) -> Result<(), MwisError> {
    if w.len() != g.n() {
        return Err(GraphError::WeightLength {
            expected: g.n(),
            got: w.len(),
        }
        .into());
    }
    Ok(())
}
