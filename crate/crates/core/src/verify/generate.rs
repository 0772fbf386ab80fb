//! Seeded graph generators and exhaustive enumeration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::VerifyError;

/// SplitMix64 finaliser.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of trial `index` under `master`; independent of execution order.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master) ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

pub(crate) fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<(), VerifyError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(VerifyError::Probability(p))
    }
}

/// Erdős–Rényi `G(n, p)`; pairs are drawn in lexicographic order.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, VerifyError> {
    check_probability(p)?;
    let mut rng = rng_from(seed);
    Ok(random_graph_with(n, p, &mut rng))
}

pub(crate) fn random_graph_with(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Random chordal graph built backwards along a random elimination order.
/// Each vertex joins a random later vertex `u` plus each of `u`'s later
/// neighbours with probability `fill`; those later neighbours form a clique,
/// so the order stays perfect. `fill = 0` yields a random tree.
pub fn gen_random_chordal(n: usize, fill: f64, seed: u64) -> Result<Graph, VerifyError> {
    check_probability(fill)?;
    let mut rng = rng_from(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for i in (0..n.saturating_sub(1)).rev() {
        let v = order[i];
        let u = order[rng.gen_range(i + 1..n)];
        let mut clique = vec![u];
        for &x in &later[u] {
            if rng.gen_bool(fill) {
                clique.push(x);
            }
        }
        for &x in &clique {
            edges.push((v, x));
        }
        later[v] = clique;
    }
    Ok(Graph::from_edges(n, edges).expect("generated edges are valid"))
}

/// Number of labelled graphs on `n` vertices, if it fits in `u64`.
pub fn labelled_graph_count(n: usize) -> Option<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    (pairs < 64).then(|| 1u64 << pairs)
}

/// The labelled graph on `n` vertices whose edge set is given by the bits
/// of `mask` over pairs in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("mask edges are valid")
}
