//! Seeded random multigraphs for cross-checking the engine against the oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regcensus_core::MultiGraph;

/// Bounds for generated graphs.
#[derive(Debug, Clone, Copy)]
pub struct CorpusSpec {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Chance that a new edge is a loop.
    pub loop_rate: f64,
    /// Chance that a new edge repeats an existing one.
    pub parallel_rate: f64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { max_vertices: 6, max_edges: 10, loop_rate: 0.12, parallel_rate: 0.15 }
    }
}

pub fn random_multigraph<R: Rng>(rng: &mut R, spec: &CorpusSpec) -> MultiGraph {
    let n = rng.random_range(1..=spec.max_vertices);
    let m = rng.random_range(0..=spec.max_edges);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    while edges.len() < m {
        let edge = if !edges.is_empty() && rng.random_bool(spec.parallel_rate) {
            edges[rng.random_range(0..edges.len())]
        } else if n == 1 || rng.random_bool(spec.loop_rate) {
            let v = rng.random_range(0..n);
            (v, v)
        } else {
            let u = rng.random_range(0..n);
            let v = (u + rng.random_range(1..n)) % n;
            (u, v)
        };
        edges.push(edge);
    }
    MultiGraph::new(n, edges).expect("indices drawn below n")
}

/// `count` graphs drawn from a ChaCha stream seeded with `seed`.
pub fn corpus(seed: u64, count: usize, spec: &CorpusSpec) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_multigraph(&mut rng, spec)).collect()
}
