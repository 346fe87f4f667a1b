#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rvx_core::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: G(n, p) resampled until connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> VertexSet {
    rand::seq::index::sample(rng, n, k).into_iter().collect()
}

/// Steiner distance by brute force: the smallest connected vertex superset
/// of `s`, minus one.
pub fn steiner_by_supersets(g: &Graph, s: VertexSet) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&t| s.is_subset(t) && g.induces_connected(t))
        .map(|t| t.len() - 1)
        .min()
        .unwrap()
}
