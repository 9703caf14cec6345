use serde::{Deserialize, Serialize};

/// Closed interval `[lo, hi]`; either bound may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const FULL: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        // NaN bounds count as empty.
        !matches!(
            self.lo.partial_cmp(&self.hi),
            Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)
        )
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }
}

/// Product of closed intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    intervals: Vec<Interval>,
}

impl Rect {
    pub fn new(intervals: Vec<Interval>) -> Self {
        Self { intervals }
    }

    /// The whole space of dimension `dim`.
    pub fn unbounded(dim: usize) -> Self {
        Self {
            intervals: vec![Interval::FULL; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn intersect_dim(&mut self, d: usize, iv: Interval) {
        self.intervals[d] = self.intervals[d].intersect(&iv);
    }

    /// Empty iff some side is empty.
    pub fn is_empty(&self) -> bool {
        self.intervals.iter().any(Interval::is_empty)
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        debug_assert_eq!(p.len(), self.intervals.len());
        self.intervals.iter().zip(p).all(|(iv, &x)| iv.contains(x))
    }
}
