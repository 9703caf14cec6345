//! Exact comparisons on sums and differences of `f64` values.
//!
//! Every geometric decision in this crate reduces to a comparison of the form
//! `a - b <= k * rho` with `k` in `-2..=2`, or to membership of a float in an
//! interval `[s - rho, s + rho]`. Rounding the sum first would let the oracle
//! and the indexes disagree on boundary cases, so differences are evaluated
//! with an error-free transformation and interval bounds are rounded outward
//! or inward so that a plain float comparison answers the real-valued question.
//!
//! All results assume that no intermediate sum overflows.

use std::cmp::Ordering;

/// Error-free transformation: `a + b == s + e` exactly, with `s = fl(a + b)`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Exact sign of `(a - b) - t` where `t` is a float.
#[inline]
pub fn cmp_diff(a: f64, b: f64, t: f64) -> Ordering {
    let (s, e) = two_sum(a, -b);
    // `s` is the nearest float to the true difference, so any float strictly
    // on one side of `s` is also on that side of the exact value.
    match s.partial_cmp(&t).expect("finite operands") {
        Ordering::Equal => e.partial_cmp(&0.0).expect("finite operands"),
        ord => ord,
    }
}

/// `|a - b| <= r`, evaluated exactly.
#[inline]
pub fn within(a: f64, b: f64, r: f64) -> bool {
    cmp_diff(a, b, r) != Ordering::Greater && cmp_diff(b, a, r) != Ordering::Greater
}

/// Largest float not exceeding the real value `a + b`.
#[inline]
pub fn add_down(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e < 0.0 {
        s.next_down()
    } else {
        s
    }
}

/// Smallest float not below the real value `a + b`.
#[inline]
pub fn add_up(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// A value of the form `base + shift * rho`, compared exactly.
///
/// Shifts stay within `-1..=1`, so the difference of two shifted values
/// involves at most `2 * rho`, which is exact in binary floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Shifted {
    pub base: f64,
    pub shift: i8,
}

impl Shifted {
    #[inline]
    pub fn at(base: f64) -> Self {
        Self { base, shift: 0 }
    }

    #[inline]
    pub fn new(base: f64, shift: i8) -> Self {
        debug_assert!((-1..=1).contains(&shift));
        Self { base, shift }
    }

    #[inline]
    pub fn cmp(self, other: Self, rho: f64) -> Ordering {
        let k = f64::from(other.shift - self.shift);
        cmp_diff(self.base, other.base, k * rho)
    }

    #[inline]
    pub fn max(self, other: Self, rho: f64) -> Self {
        if self.cmp(other, rho) == Ordering::Less {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn min(self, other: Self, rho: f64) -> Self {
        if self.cmp(other, rho) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn le(self, other: Self, rho: f64) -> bool {
        self.cmp(other, rho) != Ordering::Greater
    }
}

/// A closed interval along an edge, in edge-directed coordinates: values on a
/// falling edge are negated so that position along the edge and coordinate
/// order coincide.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeSpan {
    pub lo: Shifted,
    pub hi: Shifted,
}

/// Directed view of the edge `from -> to`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct DirectedEdge {
    sign: f64,
    start: Shifted,
    end: Shifted,
}

impl DirectedEdge {
    #[inline]
    pub fn new(from: f64, to: f64) -> Self {
        let sign = if from <= to { 1.0 } else { -1.0 };
        Self {
            sign,
            start: Shifted::at(sign * from),
            end: Shifted::at(sign * to),
        }
    }

    #[inline]
    pub fn end(&self) -> Shifted {
        self.end
    }

    /// Part of the edge within `rho` of `v`, or `None`.
    #[inline]
    pub fn free_span(&self, v: f64, rho: f64) -> Option<EdgeSpan> {
        let c = self.sign * v;
        let lo = self.start.max(Shifted::new(c, -1), rho);
        let hi = self.end.min(Shifted::new(c, 1), rho);
        lo.le(hi, rho).then_some(EdgeSpan { lo, hi })
    }
}
