//! Shared fixtures for the criterion benchmarks.

use frechet_range::synth::bench_workload;
use frechet_range::{Radius, TimeSeries};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5EED;
pub const QUERIES: usize = 64;

/// Seeded stored series and queries with `t` vertices each.
pub fn workload(n: usize, t: usize) -> (Vec<TimeSeries>, Vec<TimeSeries>) {
    bench_workload(&mut ChaCha8Rng::seed_from_u64(SEED), n, QUERIES, t, t)
}

/// Radius used throughout; small against the value range so answers are sparse.
pub fn radius() -> Radius {
    Radius::new(5.0).expect("valid radius")
}
