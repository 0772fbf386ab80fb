use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One};

use crate::graph::{GraphError, WeightFunction};
use crate::scalar::Weight;

use super::MwisError;

/// Combined weights for the weighted problem on the square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedWeights<W> {
    pub combined: WeightFunction<W>,
    /// `M = 1 + sum of user weights`.
    pub scale: W,
}

/// `W(v) = M * nbh(v) - user(v)` with `M = 1 + sum(user)`.
///
/// Every independent set of the square has `sum nbh <= n`, with equality
/// exactly for efficient dominating sets. Since `M` exceeds the total user
/// weight, any e.d. outscores any other independent set under `W`, and among
/// e.d.s the one with least user weight wins.
pub fn wed_weights<W>(
    nbh: &WeightFunction<W>,
    user: &WeightFunction<W>,
) -> Result<WedWeights<W>, MwisError>
where
    W: Weight + One + CheckedAdd + CheckedMul + CheckedSub,
{
    if nbh.len() != user.len() {
        return Err(GraphError::WeightLength {
            expected: nbh.len(),
            got: user.len(),
        }
        .into());
    }
    let scale = user
        .as_slice()
        .iter()
        .try_fold(W::one(), |acc, w| acc.checked_add(w))
        .ok_or(MwisError::Overflow)?;
    let combined = nbh
        .as_slice()
        .iter()
        .zip(user.as_slice())
        .map(|(n, u)| scale.checked_mul(n).and_then(|x| x.checked_sub(u)))
        .collect::<Option<Vec<W>>>()
        .ok_or(MwisError::Overflow)?;
    Ok(WedWeights {
        combined: WeightFunction::new(combined)?,
        scale,
    })
}
