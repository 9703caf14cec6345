//! Seeded generators for random series, datasets, and stabbing instances.
//!
//! Everything here is deterministic for a given RNG state.

use rand::Rng;

use crate::geom::{Interval, Rect};
use crate::reductions::StabInstance;
use crate::series::TimeSeries;

/// Uniform value in `[lo, hi]`, optionally snapped to a grid of `step` so
/// that ties and exact `2 rho` gaps actually occur.
pub fn random_value(rng: &mut impl Rng, lo: f64, hi: f64, step: Option<f64>) -> f64 {
    match step {
        Some(h) => {
            let k = ((hi - lo) / h).floor() as i64;
            lo + rng.random_range(0..=k) as f64 * h
        }
        None => rng.random_range(lo..=hi),
    }
}

pub fn random_series(rng: &mut impl Rng, id: impl Into<String>, len: usize, lo: f64, hi: f64, step: Option<f64>) -> TimeSeries {
    let values = (0..len).map(|_| random_value(rng, lo, hi, step)).collect();
    TimeSeries::new(id, values).expect("generated series are valid")
}

/// Series that alternates strictly, so its canonical length equals `len`.
pub fn alternating_series(rng: &mut impl Rng, id: impl Into<String>, len: usize, lo: f64, hi: f64) -> TimeSeries {
    let mid = (lo + hi) / 2.0;
    let up = rng.random_bool(0.5);
    let values = (0..len)
        .map(|k| {
            let high = (k % 2 == 1) == up;
            if high {
                rng.random_range(mid..=hi)
            } else {
                rng.random_range(lo..mid)
            }
        })
        .collect();
    TimeSeries::new(id, values).expect("generated series are valid")
}

/// `n` series with ids `s0, s1, ..` and lengths in `2..=max_len`.
pub fn random_dataset(rng: &mut impl Rng, n: usize, max_len: usize, lo: f64, hi: f64, step: Option<f64>) -> Vec<TimeSeries> {
    (0..n)
        .map(|k| {
            let len = rng.random_range(2..=max_len.max(2));
            random_series(rng, format!("s{k}"), len, lo, hi, step)
        })
        .collect()
}

/// Coordinate on the grid of multiples of `2^-10` in `[0, 1]`.
pub fn dyadic_unit(rng: &mut impl Rng) -> f64 {
    rng.random_range(0..=1024) as f64 / 1024.0
}

/// Bounded rectangles and points in the unit box with dyadic coordinates.
pub fn random_stab_instance(rng: &mut impl Rng, dim: usize, rects: usize, points: usize) -> StabInstance {
    let rects = (0..rects)
        .map(|_| {
            Rect::new(
                (0..dim)
                    .map(|_| {
                        let (a, b) = (dyadic_unit(rng), dyadic_unit(rng));
                        Interval::new(a.min(b), a.max(b))
                    })
                    .collect(),
            )
        })
        .collect();
    let points = (0..points).map(|_| (0..dim).map(|_| dyadic_unit(rng)).collect()).collect();
    StabInstance { dim, rects, points }
}

/// Stored series and queries for timing runs: strictly alternating series
/// of exactly `t_s` and `t_q` vertices with values in `[0, 1000]`, so a
/// small radius makes queries highly selective.
pub fn bench_workload(rng: &mut impl Rng, n: usize, queries: usize, t_s: usize, t_q: usize) -> (Vec<TimeSeries>, Vec<TimeSeries>) {
    let stored = (0..n).map(|k| alternating_series(rng, format!("s{k}"), t_s, 0.0, 1000.0)).collect();
    let qs = (0..queries)
        .map(|k| alternating_series(rng, format!("q{k}"), t_q, 0.0, 1000.0))
        .collect();
    (stored, qs)
}
