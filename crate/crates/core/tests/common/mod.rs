//! Reference implementations used as test oracles.
//!
//! Inputs are integers, so every quantity below is an exact rational.
//! Reachability works in edge parameters `t in [0, 1]`, the textbook
//! formulation, rather than the value coordinates the library uses.
#![allow(dead_code)]

use std::cmp::Ordering;

use frechet_range::cells::CellSequence;
use frechet_range::{Radius, TimeSeries};
use rand::Rng;

/// `n / d` with `d > 0`.
#[derive(Debug, Clone, Copy)]
pub struct Frac {
    n: i128,
    d: i128,
}

impl Frac {
    pub const ZERO: Frac = Frac { n: 0, d: 1 };
    pub const ONE: Frac = Frac { n: 1, d: 1 };

    fn new(n: i128, d: i128) -> Self {
        if d < 0 {
            Frac { n: -n, d: -d }
        } else {
            Frac { n, d }
        }
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        self.n * o.d == o.n * self.d
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some((self.n * o.d).cmp(&(o.n * self.d)))
    }
}

fn fmax(a: Frac, b: Frac) -> Frac {
    if a >= b {
        a
    } else {
        b
    }
}

fn fmin(a: Frac, b: Frac) -> Frac {
    if a <= b {
        a
    } else {
        b
    }
}

/// Closed parameter interval on `[0, 1]`.
pub type Span = Option<(Frac, Frac)>;

/// Parameters `t` with `|a + t (b - a) - v| <= r`.
pub fn edge_span(a: i64, b: i64, v: i64, r: i64) -> Span {
    let (a, b, v, r) = (a as i128, b as i128, v as i128, r as i128);
    if a == b {
        return ((a - v).abs() <= r).then_some((Frac::ZERO, Frac::ONE));
    }
    // a + t (b - a) in [v - r, v + r]
    let t1 = Frac::new(v - r - a, b - a);
    let t2 = Frac::new(v + r - a, b - a);
    let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    let lo = fmax(lo, Frac::ZERO);
    let hi = fmin(hi, Frac::ONE);
    (lo <= hi).then_some((lo, hi))
}

/// Right boundary of cell `(i, j)` (0-based edges): vertex `i + 1` of `q`
/// against edge `j` of `s`.
fn right(q: &[i64], s: &[i64], i: usize, j: usize, r: i64) -> Span {
    edge_span(s[j], s[j + 1], q[i + 1], r)
}

/// Top boundary of cell `(i, j)`: vertex `j + 1` of `s` against edge `i` of `q`.
fn top(q: &[i64], s: &[i64], i: usize, j: usize, r: i64) -> Span {
    edge_span(q[i], q[i + 1], s[j + 1], r)
}

/// Exits of one cell given the reachable parts of its left and bottom
/// boundaries (the free space in a cell is convex).
fn cell_exits(left: Span, bottom: Span, rgt: Span, tp: Span) -> (Span, Span) {
    let mut out_r = None;
    let mut out_t = None;
    if let Some((lo, hi)) = rgt {
        if bottom.is_some() {
            out_r = Some((lo, hi));
        } else if let Some((l0, _)) = left {
            let lo = fmax(lo, l0);
            out_r = (lo <= hi).then_some((lo, hi));
        }
    }
    if let Some((lo, hi)) = tp {
        if left.is_some() {
            out_t = Some((lo, hi));
        } else if let Some((b0, _)) = bottom {
            let lo = fmax(lo, b0);
            out_t = (lo <= hi).then_some((lo, hi));
        }
    }
    (out_r, out_t)
}

fn start_free(q: &[i64], s: &[i64], r: i64) -> bool {
    (q[0] - s[0]).abs() <= r
}

fn end_free(q: &[i64], s: &[i64], r: i64) -> bool {
    (q[q.len() - 1] - s[s.len() - 1]).abs() <= r
}

fn corner_entry() -> Span {
    Some((Frac::ZERO, Frac::ZERO))
}

/// Whether the far corner of the last cell is reachable given its entries.
fn reaches_end(left: Span, bottom: Span) -> bool {
    left.is_some() || bottom.is_some()
}

/// Fréchet decision `d_F(q, s) <= r` by free-space reachability.
pub fn frechet(q: &[i64], s: &[i64], r: i64) -> bool {
    if !start_free(q, s, r) || !end_free(q, s, r) {
        return false;
    }
    let (nx, ny) = (q.len() - 1, s.len() - 1);
    // reach_r[i][j]: reachable part of the right boundary of cell (i, j).
    let mut reach_r = vec![vec![None; ny]; nx];
    let mut reach_t = vec![vec![None; ny]; nx];
    for i in 0..nx {
        for j in 0..ny {
            let (left, bottom) = if i == 0 && j == 0 {
                (corner_entry(), corner_entry())
            } else {
                let left = if i == 0 { None } else { reach_r[i - 1][j] };
                let bottom = if j == 0 { None } else { reach_t[i][j - 1] };
                (left, bottom)
            };
            let (r_out, t_out) = cell_exits(left, bottom, right(q, s, i, j, r), top(q, s, i, j, r));
            reach_r[i][j] = r_out;
            reach_t[i][j] = t_out;
            if i == nx - 1 && j == ny - 1 {
                return reaches_end(left, bottom);
            }
        }
    }
    unreachable!()
}

/// Whether a feasible path traverses exactly the cells of `seq` (1-based
/// cells; columns are edges of `q`).
pub fn feasible_along(seq: &CellSequence, q: &[i64], s: &[i64], r: i64) -> bool {
    if !start_free(q, s, r) || !end_free(q, s, r) {
        return false;
    }
    let cells = seq.cells();
    let (mut left, mut bottom) = (corner_entry(), corner_entry());
    for (k, c) in cells.iter().enumerate() {
        let (i, j) = (c.i - 1, c.j - 1);
        if k + 1 == cells.len() {
            return reaches_end(left, bottom);
        }
        let next = cells[k + 1];
        let (r_out, t_out) = cell_exits(left, bottom, right(q, s, i, j, r), top(q, s, i, j, r));
        if next.i == c.i + 1 {
            left = r_out;
            bottom = None;
        } else {
            left = None;
            bottom = t_out;
        }
        if left.is_none() && bottom.is_none() {
            return false;
        }
    }
    unreachable!()
}

/// Some point of edge `i` of `a` (1-based) lies within `r` of `v`.
pub fn near(a: &[i64], i: usize, v: i64, r: i64) -> bool {
    edge_span(a[i - 1], a[i], v, r).is_some()
}

/// Points `t1 <= t2` on edge `i` of `a` near `v1` and `v2` respectively.
pub fn ordered_near(a: &[i64], i: usize, v1: i64, v2: i64, r: i64) -> bool {
    match (edge_span(a[i - 1], a[i], v1, r), edge_span(a[i - 1], a[i], v2, r)) {
        (Some((lo1, _)), Some((_, hi2))) => lo1 <= hi2,
        _ => false,
    }
}

pub fn p1(q: &[i64], s: &[i64], r: i64) -> bool {
    start_free(q, s, r)
}

pub fn p2(q: &[i64], s: &[i64], r: i64) -> bool {
    end_free(q, s, r)
}

pub fn p3(q: &[i64], s: &[i64], i: usize, j: usize, r: i64) -> bool {
    near(q, i, s[j - 1], r)
}

pub fn p4(q: &[i64], s: &[i64], i: usize, j: usize, r: i64) -> bool {
    near(s, j, q[i - 1], r)
}

pub fn p5(q: &[i64], s: &[i64], i: usize, j: usize, k: usize, r: i64) -> bool {
    ordered_near(q, i, s[j - 1], s[k - 1], r)
}

pub fn p6(q: &[i64], s: &[i64], i: usize, l: usize, j: usize, r: i64) -> bool {
    ordered_near(s, j, q[i - 1], q[l - 1], r)
}

/// Forward number of vertex `i` (1-based) straight from the definition.
pub fn forward_number(q: &[i64], i: usize, r: i64) -> usize {
    (i..=q.len())
        .filter(|&k| {
            let (a, b) = (q[i - 1] - r, q[k - 1] + r);
            k == i || (a <= b && frechet(&q[i - 1..k], &[a, b], r))
        })
        .max()
        .unwrap()
}

/// Backward number of vertex `i` straight from the definition.
pub fn backward_number(q: &[i64], i: usize, r: i64) -> usize {
    (i..=q.len())
        .filter(|&k| {
            let (a, b) = (q[i - 1] + r, q[k - 1] - r);
            k == i || (a >= b && frechet(&q[i - 1..k], &[a, b], r))
        })
        .max()
        .unwrap()
}

/// Integer data scaled by `1 / scale` on the library side.
pub struct Scaled {
    pub scale: f64,
}

impl Scaled {
    pub fn series(&self, id: &str, v: &[i64]) -> TimeSeries {
        TimeSeries::new(id, v.iter().map(|&x| x as f64 / self.scale).collect()).unwrap()
    }

    pub fn values(&self, v: &[i64]) -> Vec<f64> {
        v.iter().map(|&x| x as f64 / self.scale).collect()
    }

    pub fn radius(&self, r: i64) -> Radius {
        Radius::new(r as f64 / self.scale).unwrap()
    }
}

/// Integer series with length drawn from `lens` and entries in `[lo, hi]`.
pub fn int_series(rng: &mut impl Rng, lens: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<i64> {
    let len = rng.random_range(lens);
    (0..len).map(|_| rng.random_range(lo..=hi)).collect()
}

/// Integer series alternating in the pattern of `m_shaped` (weakly).
pub fn int_shaped(rng: &mut impl Rng, len: usize, lo: i64, hi: i64, m_shaped: bool) -> Vec<i64> {
    let mut v = vec![rng.random_range(lo..=hi)];
    for e in 1..len {
        let prev = v[e - 1];
        let rising = (e % 2 == 1) == m_shaped;
        let x = if rising {
            rng.random_range(prev..=hi)
        } else {
            rng.random_range(lo..=prev)
        };
        v.push(x);
    }
    v
}

pub fn mirror(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}
