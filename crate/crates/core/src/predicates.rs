//! The six free-space predicates, their interval forms, and forward/backward
//! numbers.
//!
//! Predicates are phrased for a free-space grid of a first curve `q`
//! (columns) against a second curve `s` (rows); indices are 1-based.
//!
//! * `P1`, `P2`: start and end vertices within `rho` of each other.
//! * `P3(i, j)`: some point of q-edge `i` is within `rho` of `s_j`.
//! * `P4(i, j)`: some point of s-edge `j` is within `rho` of `q_i`.
//! * `P5(i, j, k)`: q-edge `i` has points near `s_j` and, not before it, near `s_k`.
//! * `P6(i, l, j)`: s-edge `j` has points near `q_i` and, not before it, near `q_l`.
//!
//! [`eval_predicate`] evaluates the existential definitions directly. The
//! interval forms in [`simple_intervals`] and [`pair_intervals`] are what the
//! indexes store; [`fb_profile`] and [`bundle_check`] replace `P6` with a
//! property of the first curve alone.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{add_down, add_up, cmp_diff, within, DirectedEdge};
use crate::freespace::decide_frechet;
use crate::series::{Radius, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PredicateId {
    P1,
    P2,
    P3 { i: usize, j: usize },
    P4 { i: usize, j: usize },
    P5 { i: usize, j: usize, k: usize },
    P6 { i: usize, l: usize, j: usize },
}

impl std::fmt::Display for PredicateId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            PredicateId::P1 => write!(f, "P1"),
            PredicateId::P2 => write!(f, "P2"),
            PredicateId::P3 { i, j } => write!(f, "P3({i},{j})"),
            PredicateId::P4 { i, j } => write!(f, "P4({i},{j})"),
            PredicateId::P5 { i, j, k } => write!(f, "P5({i},{j},{k})"),
            PredicateId::P6 { i, l, j } => write!(f, "P6({i},{l},{j})"),
        }
    }
}

fn check_vertex(idx: usize, len: usize, what: &str) -> Result<()> {
    if idx == 0 || idx > len {
        Err(Error::IndexOutOfRange(format!("{what} vertex {idx} not in 1..={len}")))
    } else {
        Ok(())
    }
}

fn check_edge(idx: usize, len: usize, what: &str) -> Result<()> {
    if idx == 0 || idx >= len {
        Err(Error::IndexOutOfRange(format!("{what} edge {idx} not in 1..{len}")))
    } else {
        Ok(())
    }
}

/// Whether the directed edge `a -> b` has points within `rho` of `u` and,
/// not before them, points within `rho` of `v`.
fn ordered_pair_on_edge(a: f64, b: f64, u: f64, v: f64, rho: f64) -> bool {
    let edge = DirectedEdge::new(a, b);
    match (edge.free_span(u, rho), edge.free_span(v, rho)) {
        (Some(first), Some(second)) => first.lo.le(second.hi, rho),
        _ => false,
    }
}

/// Truth value of `p` for first curve `q` and second curve `s`.
pub fn eval_predicate(p: PredicateId, q: &[f64], s: &[f64], rho: Radius) -> Result<bool> {
    let r = rho.get();
    let (tq, ts) = (q.len(), s.len());
    Ok(match p {
        PredicateId::P1 => within(q[0], s[0], r),
        PredicateId::P2 => within(q[tq - 1], s[ts - 1], r),
        PredicateId::P3 { i, j } => {
            check_edge(i, tq, "first-curve")?;
            check_vertex(j, ts, "second-curve")?;
            ordered_pair_on_edge(q[i - 1], q[i], s[j - 1], s[j - 1], r)
        }
        PredicateId::P4 { i, j } => {
            check_vertex(i, tq, "first-curve")?;
            check_edge(j, ts, "second-curve")?;
            ordered_pair_on_edge(s[j - 1], s[j], q[i - 1], q[i - 1], r)
        }
        PredicateId::P5 { i, j, k } => {
            check_edge(i, tq, "first-curve")?;
            check_vertex(j, ts, "second-curve")?;
            check_vertex(k, ts, "second-curve")?;
            ordered_pair_on_edge(q[i - 1], q[i], s[j - 1], s[k - 1], r)
        }
        PredicateId::P6 { i, l, j } => {
            check_vertex(i, tq, "first-curve")?;
            check_vertex(l, tq, "first-curve")?;
            check_edge(j, ts, "second-curve")?;
            ordered_pair_on_edge(s[j - 1], s[j], q[i - 1], q[l - 1], r)
        }
    })
}

/// Constraint `lower <= q_vertex <= upper` on one first-curve vertex.
///
/// Bounds are rounded inward so that a plain float comparison decides the
/// real-valued constraint exactly; infinite bounds mean one-sided.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalConstraint {
    pub vertex: usize,
    pub lower: f64,
    pub upper: f64,
}

impl IntervalConstraint {
    /// `vertex >= c - rho` and `vertex <= c + rho`.
    fn around(vertex: usize, c: f64, rho: f64) -> Self {
        Self {
            vertex,
            lower: add_up(c, -rho),
            upper: add_down(c, rho),
        }
    }

    /// `vertex <= c + rho`.
    fn at_most(vertex: usize, c: f64, rho: f64) -> Self {
        Self {
            vertex,
            lower: f64::NEG_INFINITY,
            upper: add_down(c, rho),
        }
    }

    /// `vertex >= c - rho`.
    fn at_least(vertex: usize, c: f64, rho: f64) -> Self {
        Self {
            vertex,
            lower: add_up(c, -rho),
            upper: f64::INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Interval form of `P1`..`P4` as constraints on the first curve, which has
/// `first_len` vertices and shape `first_shape`.
///
/// For `P3`, the orientation of first-curve edge `i` under `first_shape`
/// selects the branch; a flat edge satisfies both branches identically.
pub fn simple_intervals(
    p: PredicateId,
    second: &[f64],
    first_len: usize,
    rho: Radius,
    first_shape: Shape,
) -> Result<Vec<IntervalConstraint>> {
    let r = rho.get();
    let ts = second.len();
    Ok(match p {
        PredicateId::P1 => vec![IntervalConstraint::around(1, second[0], r)],
        PredicateId::P2 => vec![IntervalConstraint::around(first_len, second[ts - 1], r)],
        PredicateId::P3 { i, j } => {
            check_edge(i, first_len, "first-curve")?;
            check_vertex(j, ts, "second-curve")?;
            let c = second[j - 1];
            if first_shape.edge_rises(i) {
                vec![IntervalConstraint::at_most(i, c, r), IntervalConstraint::at_least(i + 1, c, r)]
            } else {
                vec![IntervalConstraint::at_least(i, c, r), IntervalConstraint::at_most(i + 1, c, r)]
            }
        }
        PredicateId::P4 { i, j } => {
            check_vertex(i, first_len, "first-curve")?;
            check_edge(j, ts, "second-curve")?;
            let (a, b) = (second[j - 1], second[j]);
            vec![IntervalConstraint {
                vertex: i,
                lower: add_up(a.min(b), -r),
                upper: add_down(a.max(b), r),
            }]
        }
        other => return Err(Error::UnsupportedKind(other.to_string())),
    })
}

/// Interval form of `P5(i, j, k)`: both `P3` constraint sets plus, when the
/// two second-curve vertices are more than `2 rho` apart, the ordering
/// constraints on the endpoints of first-curve edge `i`.
pub fn pair_intervals(
    i: usize,
    j: usize,
    k: usize,
    second: &[f64],
    first_len: usize,
    rho: Radius,
    first_shape: Shape,
) -> Result<Vec<IntervalConstraint>> {
    check_vertex(k, second.len(), "second-curve")?;
    let mut out = simple_intervals(PredicateId::P3 { i, j }, second, first_len, rho, first_shape)?;
    out.extend(simple_intervals(PredicateId::P3 { i, j: k }, second, first_len, rho, first_shape)?);
    let r = rho.get();
    let (sj, sk) = (second[j - 1], second[k - 1]);
    let two_r = 2.0 * r;
    if sj <= sk && cmp_diff(sk, sj, two_r) == Ordering::Greater {
        out.push(IntervalConstraint::at_most(i, sj, r));
        out.push(IntervalConstraint::at_least(i + 1, sk, r));
    } else if sj > sk && cmp_diff(sj, sk, two_r) == Ordering::Greater {
        out.push(IntervalConstraint::at_least(i, sj, r));
        out.push(IntervalConstraint::at_most(i + 1, sk, r));
    }
    Ok(out)
}

/// Forward numbers `f_i` and backward numbers `b_i` of a curve for a fixed
/// radius; `forward[i - 1]` holds `f_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FbProfile {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Forward and backward numbers of `q` at radius `rho`.
///
/// `f_i` is the largest `k` such that the subcurve `q_i..q_k` lies within
/// Fréchet distance `rho` of the forward segment from `q_i - rho` to
/// `q_k + rho`. That holds exactly when no vertex of the subcurve exceeds a
/// later one by more than `2 rho`, so the scan stops at the first violation
/// (the condition is prefix-closed). `b_i` is the mirror image.
pub fn fb_profile(q: &[f64], rho: Radius) -> FbProfile {
    let two_r = 2.0 * rho.get();
    let n = q.len();
    let mut forward = Vec::with_capacity(n);
    let mut backward = Vec::with_capacity(n);
    for i in 0..n {
        let mut hi = q[i];
        let mut k = i;
        while k + 1 < n && cmp_diff(hi, q[k + 1], two_r) != Ordering::Greater {
            k += 1;
            hi = hi.max(q[k]);
        }
        forward.push(k + 1);

        let mut lo = q[i];
        let mut k = i;
        while k + 1 < n && cmp_diff(q[k + 1], lo, two_r) != Ordering::Greater {
            k += 1;
            lo = lo.min(q[k]);
        }
        backward.push(k + 1);
    }
    FbProfile { forward, backward }
}

/// Whether `k` satisfies the forward-number condition for `i` (1-based),
/// decided literally with the Fréchet oracle.
///
/// The shifted segment endpoints `q_i - rho` and `q_k + rho` are rounded to
/// floats, so this agrees with [`fb_profile`] whenever those sums are exact
/// (for example on dyadic grids); it exists as an independent reference.
pub fn forward_condition_by_decision(q: &[f64], i: usize, k: usize, rho: Radius) -> bool {
    let r = rho.get();
    let (a, b) = (q[i - 1] - r, q[k - 1] + r);
    a <= b && decide_frechet(&q[i - 1..k], &[a, b], rho)
}

/// Backward counterpart of [`forward_condition_by_decision`].
pub fn backward_condition_by_decision(q: &[f64], i: usize, k: usize, rho: Radius) -> bool {
    let r = rho.get();
    let (a, b) = (q[i - 1] + r, q[k - 1] - r);
    a >= b && decide_frechet(&q[i - 1..k], &[a, b], rho)
}

/// Forward/backward numbers taken literally as a maximum over all `k`, each
/// condition decided by the Fréchet oracle. See
/// [`forward_condition_by_decision`] for the rounding caveat.
pub fn fb_profile_by_decision(q: &[f64], rho: Radius) -> FbProfile {
    let n = q.len();
    let pick = |i: usize, cond: &dyn Fn(usize) -> bool| (i..=n).filter(|&k| cond(k)).max().unwrap_or(i);
    let forward = (1..=n)
        .map(|i| pick(i, &|k| k == i || forward_condition_by_decision(q, i, k, rho)))
        .collect();
    let backward = (1..=n)
        .map(|i| pick(i, &|k| k == i || backward_condition_by_decision(q, i, k, rho)))
        .collect();
    FbProfile { forward, backward }
}

/// Bundled check of all `P6(x, y, j)` with `i <= x < y <= l` via the forward
/// (rising s-edge) or backward (falling s-edge) number of `q_i` plus the
/// vertex-edge predicates along the run.
pub fn bundle_check(i: usize, l: usize, j: usize, q: &[f64], s: &[f64], rho: Radius) -> Result<bool> {
    check_vertex(i, q.len(), "first-curve")?;
    check_vertex(l, q.len(), "first-curve")?;
    check_edge(j, s.len(), "second-curve")?;
    if i >= l {
        return Err(Error::IndexOutOfRange(format!("need i < l, got {i} >= {l}")));
    }
    let profile = fb_profile(q, rho);
    let reach = if s[j - 1] <= s[j] {
        profile.forward[i - 1]
    } else {
        profile.backward[i - 1]
    };
    if reach < l {
        return Ok(false);
    }
    for x in i..=l {
        if !eval_predicate(PredicateId::P4 { i: x, j }, q, s, rho)? {
            return Ok(false);
        }
    }
    Ok(true)
}
