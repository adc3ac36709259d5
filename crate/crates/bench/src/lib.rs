//! Seeded inputs shared by the benchmarks.

use coxeter_core::gf2::random_vertex;
use coxeter_core::Vertex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// `count` random vertex pairs in dimension `n`.
pub fn vertex_pairs(n: usize, count: usize) -> Vec<(Vertex, Vertex)> {
    let mut rng = rng();
    (0..count)
        .map(|_| (random_vertex(n, &mut rng), random_vertex(n, &mut rng)))
        .collect()
}
