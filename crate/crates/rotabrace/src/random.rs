//! Seeded random maps on pairs, for negative braid-check examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotabrace_core::ybe::SolutionMap;

/// A uniformly random map `S × S → S × S` on `order` points.
pub fn random_map(order: usize, seed: u64) -> SolutionMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = (0..order * order)
        .map(|_| (rng.gen_range(0..order), rng.gen_range(0..order)))
        .collect();
    SolutionMap::from_table(order, table).expect("images are in range")
}

/// The first seed at or after `seed` whose random map breaks the braid relation.
pub fn random_non_solution(order: usize, seed: u64) -> (u64, SolutionMap) {
    (seed..)
        .map(|s| (s, random_map(order, s)))
        .find(|(_, r)| !r.is_solution())
        .expect("some random map is not a solution")
}
