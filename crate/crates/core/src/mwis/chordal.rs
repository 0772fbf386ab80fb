use crate::bitset::BitSet;
use crate::graph::{Graph, VertexSet, WeightFunction};
use crate::recognition::EliminationOrder;
use crate::scalar::Weight;

use super::{check_len, MwisError, MwisMethod, MwisResult};

/// Frank's algorithm for chordal graphs.
///
/// Vertices are scanned along the perfect elimination order with residual
/// weights; a vertex with positive residual is marked and its residual is
/// subtracted from its later neighbours (clamped at zero). Marked vertices
/// are then taken greedily in reverse marking order.
pub fn mwis_chordal<W: Weight>(
    g: &Graph,
    w: &WeightFunction<W>,
    peo: &EliminationOrder,
) -> Result<MwisResult<W>, MwisError> {
    check_len(g, w)?;
    peo.check_perfect(g)?;

    let mut residual: Vec<W> = w.as_slice().to_vec();
    let mut marked = Vec::new();
    for &v in peo.as_slice() {
        let r = residual[v];
        if !r.is_positive() {
            continue;
        }
        marked.push(v);
        for u in peo.later_neighbors(g, v) {
            residual[u] = residual[u].saturating_diff(r);
        }
    }

    let mut blocked = BitSet::new(g.n());
    let mut chosen = Vec::new();
    for &v in marked.iter().rev() {
        if blocked.contains(v) {
            continue;
        }
        chosen.push(v);
        for &u in g.neighbors(v) {
            blocked.insert(u);
        }
    }
    let set = VertexSet::from(chosen);
    let value = w.sum_over(&set);
    Ok(MwisResult {
        set,
        value,
        method: MwisMethod::ChordalGreedy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::recognition::{chordality, Chordality, OrderError};

    fn brute_force<W: Weight>(g: &Graph, w: &WeightFunction<W>) -> W {
        let n = g.n();
        let mut best = W::zero();
        for mask in 0u64..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_independent_set(&set).unwrap() {
                best = best.max_of(w.sum_over(&set));
            }
        }
        best
    }

    #[test]
    fn p3_heavy_centre() {
        let w = WeightFunction::new(vec![1u32, 3, 1]).unwrap();
        let peo = EliminationOrder::new(vec![0, 2, 1]).unwrap();
        let r = mwis_chordal(&path(3), &w, &peo).unwrap();
        assert_eq!(brute_force(&path(3), &w), 3);
        assert_eq!(r.set.as_slice(), &[1]);
        assert_eq!(r.value, 3);
    }

    #[test]
    fn star_leaves_win() {
        let g = star(3);
        let w = WeightFunction::new(vec![5u64, 2, 2, 2]).unwrap();
        let peo = EliminationOrder::new(vec![1, 2, 3, 0]).unwrap();
        let r = mwis_chordal(&g, &w, &peo).unwrap();
        assert_eq!(brute_force(&g, &w), 6);
        assert_eq!(r.set.as_slice(), &[1, 2, 3]);
        assert_eq!(r.value, 6);
    }

    #[test]
    fn single_vertex() {
        let w = WeightFunction::new(vec![7u8]).unwrap();
        let peo = EliminationOrder::new(vec![0]).unwrap();
        let r = mwis_chordal(&Graph::edgeless(1), &w, &peo).unwrap();
        assert_eq!(r.set.as_slice(), &[0]);
        assert_eq!(r.value, 7);
    }

    #[test]
    fn zero_weights_are_skipped() {
        let w = WeightFunction::new(vec![0u32, 0, 0]).unwrap();
        let peo = EliminationOrder::new(vec![0, 2, 1]).unwrap();
        let r = mwis_chordal(&path(3), &w, &peo).unwrap();
        assert!(r.set.is_empty());
    }

    #[test]
    fn rejects_bad_orders() {
        let w = WeightFunction::new(vec![1u32; 3]).unwrap();
        let bad = EliminationOrder::new(vec![1, 0, 2]).unwrap();
        assert!(matches!(
            mwis_chordal(&path(3), &w, &bad),
            Err(MwisError::Order(OrderError::NotPerfect { .. }))
        ));
        let short = EliminationOrder::new(vec![1, 0]).unwrap();
        assert!(matches!(
            mwis_chordal(&path(3), &w, &short),
            Err(MwisError::Order(_))
        ));
    }

    #[test]
    fn float_weights() {
        let g = complete_sun(4);
        let w = WeightFunction::new(vec![1.5f64, 0.5, 2.0, 1.0, 1.25, 0.75, 1.0, 0.5]).unwrap();
        let Chordality::Chordal(peo) = chordality(&g) else {
            panic!()
        };
        let r = mwis_chordal(&g, &w, &peo).unwrap();
        assert!((r.value - brute_force(&g, &w)).abs() < 1e-12);
    }
}
