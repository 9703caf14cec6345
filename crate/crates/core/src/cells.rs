//! Valid cell sequences of the free-space grid, the predicates each one
//! induces, its forward/backward requirements, and the axis-aligned
//! rectangles that encode its interval constraints.
//!
//! A grid has `x_edges` columns (edges of the first curve) and `y_edges` rows
//! (edges of the second curve). Cells are addressed `(i, j)`, 1-based, with
//! `i` the column and `j` the row.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Interval, Rect};
use crate::predicates::{pair_intervals, simple_intervals, IntervalConstraint, PredicateId};
use crate::series::{CanonicalSeries, Radius, Shape};

/// Default cap on the number of valid cell sequences per grid.
pub const DEFAULT_SEQUENCE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

/// A monotone staircase from cell `(1, 1)` to `(x_edges, y_edges)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellSequence {
    cells: Vec<Cell>,
    x_edges: usize,
    y_edges: usize,
}

impl CellSequence {
    pub fn new(cells: Vec<Cell>, x_edges: usize, y_edges: usize) -> Result<Self> {
        if x_edges == 0 || y_edges == 0 {
            return Err(Error::InvalidComplexity(x_edges.min(y_edges) + 1));
        }
        let expected = x_edges + y_edges - 1;
        if cells.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: cells.len(),
            });
        }
        if cells[0] != (Cell { i: 1, j: 1 }) {
            return Err(Error::IndexOutOfRange("sequence must start at (1, 1)".into()));
        }
        for w in cells.windows(2) {
            let (a, b) = (w[0], w[1]);
            let step_x = b.i == a.i + 1 && b.j == a.j;
            let step_y = b.j == a.j + 1 && b.i == a.i;
            if !(step_x || step_y) {
                return Err(Error::IndexOutOfRange(format!(
                    "({}, {}) -> ({}, {}) is not a unit step",
                    a.i, a.j, b.i, b.j
                )));
            }
        }
        Ok(Self { cells, x_edges, y_edges })
    }

    /// Builds a sequence from its step string: `'x'` advances the column,
    /// `'y'` the row.
    pub fn from_steps(steps: &str, x_edges: usize, y_edges: usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(steps.len() + 1);
        let mut cur = Cell { i: 1, j: 1 };
        cells.push(cur);
        for ch in steps.chars() {
            match ch {
                'x' => cur.i += 1,
                'y' => cur.j += 1,
                other => {
                    return Err(Error::IndexOutOfRange(format!("unknown step {other:?}")));
                }
            }
            cells.push(cur);
        }
        if cur != (Cell { i: x_edges, j: y_edges }) {
            return Err(Error::IndexOutOfRange(format!(
                "sequence ends at ({}, {}) instead of ({x_edges}, {y_edges})",
                cur.i, cur.j
            )));
        }
        Self::new(cells, x_edges, y_edges)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn x_edges(&self) -> usize {
        self.x_edges
    }

    pub fn y_edges(&self) -> usize {
        self.y_edges
    }

    pub fn steps(&self) -> String {
        self.cells.windows(2).map(|w| if w[1].i > w[0].i { 'x' } else { 'y' }).collect()
    }

    /// Inclusive column range `[first, last]` occupied in row `j`.
    fn row_run(&self, j: usize) -> (usize, usize) {
        let mut it = self.cells.iter().filter(|c| c.j == j).map(|c| c.i);
        let first = it.next().expect("every row is visited");
        let last = it.next_back().unwrap_or(first);
        (first, last)
    }

    /// Inclusive row range occupied in column `i`.
    fn column_run(&self, i: usize) -> (usize, usize) {
        let mut it = self.cells.iter().filter(|c| c.i == i).map(|c| c.j);
        let first = it.next().expect("every column is visited");
        let last = it.next_back().unwrap_or(first);
        (first, last)
    }
}

/// `binomial(n, k)` without overflow for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * u128::from(n - t) / u128::from(t + 1);
    }
    acc
}

/// Number of valid sequences for curves of complexity `t_x` and `t_y`.
pub fn sequence_count(t_x: usize, t_y: usize) -> u128 {
    binomial((t_x + t_y - 4) as u64, (t_x - 2) as u64)
}

/// All valid cell sequences for curves of complexity `t_x` (columns) and
/// `t_y` (rows), ordered lexicographically by step string (`'x' < 'y'`).
pub fn enumerate_valid(t_x: usize, t_y: usize, cap: u64) -> Result<Vec<CellSequence>> {
    if t_x < 2 {
        return Err(Error::InvalidComplexity(t_x));
    }
    if t_y < 2 {
        return Err(Error::InvalidComplexity(t_y));
    }
    let count = sequence_count(t_x, t_y);
    if count > u128::from(cap) {
        return Err(Error::ComplexityTooLarge { count, cap });
    }
    let (xe, ye) = (t_x - 1, t_y - 1);
    let mut out = Vec::with_capacity(count as usize);
    let mut steps = String::with_capacity(xe + ye);
    fn rec(xs: usize, ys: usize, steps: &mut String, out: &mut Vec<String>) {
        if xs == 0 && ys == 0 {
            out.push(steps.clone());
            return;
        }
        if xs > 0 {
            steps.push('x');
            rec(xs - 1, ys, steps, out);
            steps.pop();
        }
        if ys > 0 {
            steps.push('y');
            rec(xs, ys - 1, steps, out);
            steps.pop();
        }
    }
    let mut strings = Vec::with_capacity(count as usize);
    rec(xe - 1, ye - 1, &mut steps, &mut strings);
    for s in strings {
        out.push(CellSequence::from_steps(&s, xe, ye)?);
    }
    Ok(out)
}

/// Predicates whose joint truth characterizes feasibility of `seq`.
///
/// Same-index monotonicity predicates along the second curve are dropped;
/// they hold whenever the corresponding vertex-edge predicate holds.
pub fn induced_predicates(seq: &CellSequence) -> Vec<PredicateId> {
    let mut out = vec![PredicateId::P1, PredicateId::P2];
    for w in seq.cells.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.j == a.j + 1 {
            out.push(PredicateId::P3 { i: b.i, j: b.j });
        } else {
            out.push(PredicateId::P4 { i: b.i, j: b.j });
        }
    }
    for i in 1..=seq.x_edges {
        let (first, last) = seq.column_run(i);
        for j in first + 1..=last {
            for k in j..=last {
                out.push(PredicateId::P5 { i, j, k });
            }
        }
    }
    for j in 1..=seq.y_edges {
        let (first, last) = seq.row_run(j);
        for i in first + 1..=last {
            for l in i + 1..=last {
                out.push(PredicateId::P6 { i, l, j });
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|p| seen.insert(*p));
    out
}

/// Forward and backward requirements `f_i(C)`, `b_i(C)` for interior
/// first-curve vertices `i = 2 ..= x_edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FbRequirement {
    /// `forward[i - 2]` is `f_i(C)`.
    pub forward: Vec<usize>,
    /// `backward[i - 2]` is `b_i(C)`.
    pub backward: Vec<usize>,
}

impl FbRequirement {
    /// Whether a profile meets every requirement.
    pub fn satisfied_by(&self, profile: &crate::predicates::FbProfile) -> bool {
        self.forward
            .iter()
            .zip(&self.backward)
            .enumerate()
            .all(|(off, (&f, &b))| profile.forward[off + 1] >= f && profile.backward[off + 1] >= b)
    }
}

/// Requirements for `seq` when the second curve is M-shaped.
pub fn fb_requirements(seq: &CellSequence) -> FbRequirement {
    fb_requirements_for(seq, Shape::M)
}

/// Requirements for `seq` when the second curve has shape `second`: a run
/// along a rising row needs the forward number, a run along a falling row the
/// backward number.
pub fn fb_requirements_for(seq: &CellSequence, second: Shape) -> FbRequirement {
    let inner = seq.x_edges.saturating_sub(1);
    let mut forward: Vec<usize> = (2..=seq.x_edges).collect();
    let mut backward = forward.clone();
    for w in seq.cells.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.i != a.i + 1 {
            continue;
        }
        // Vertex b.i is crossed inside row b.j; the run continues to `last`.
        let (_, last) = seq.row_run(b.j);
        let slot = b.i - 2;
        if second.edge_rises(b.j) {
            forward[slot] = last;
        } else {
            backward[slot] = last;
        }
    }
    debug_assert_eq!(forward.len(), inner);
    FbRequirement { forward, backward }
}

/// Constraints on the first curve's vertices induced by `seq` against the
/// second curve `second`, for a first curve of shape `first_shape`.
pub(crate) fn constraint_rect(seq: &CellSequence, second: &[f64], rho: Radius, first_shape: Shape) -> Rect {
    let dim = seq.x_edges + 1;
    let mut rect = Rect::unbounded(dim);
    let mut apply = |cs: Vec<IntervalConstraint>| {
        for c in cs {
            rect.intersect_dim(c.vertex - 1, Interval::new(c.lower, c.upper));
        }
    };
    for p in induced_predicates(seq) {
        match p {
            PredicateId::P1 | PredicateId::P2 | PredicateId::P3 { .. } | PredicateId::P4 { .. } => {
                apply(simple_intervals(p, second, dim, rho, first_shape).expect("induced indices are in range"));
            }
            PredicateId::P5 { i, j, k } => {
                apply(pair_intervals(i, j, k, second, dim, rho, first_shape).expect("induced indices are in range"));
            }
            PredicateId::P6 { .. } => {}
        }
    }
    rect
}

/// Rectangle over query-vertex coordinates for a stored M-shaped series `s`.
///
/// A query of shape `query_shape` stabs this rectangle and meets
/// [`fb_requirements`] exactly when `seq` is feasible in its free space with
/// `s`.
pub fn build_rectangle(seq: &CellSequence, s: &CanonicalSeries, rho: Radius, query_shape: Shape) -> Result<Rect> {
    if s.shape() != Shape::M || !Shape::M.admits(s.values()) {
        return Err(Error::ShapeViolation(format!("stored series `{}` must be M-shaped", s.source_id())));
    }
    if s.len() != seq.y_edges + 1 {
        return Err(Error::DimensionMismatch {
            expected: seq.y_edges + 1,
            found: s.len(),
        });
    }
    Ok(constraint_rect(seq, s.values(), rho, query_shape))
}

/// Rectangle over stored-vertex coordinates for the role-swapped grid: `seq`
/// ranges over the free space of a stored series (columns) against the query
/// `q` (rows), and stored series are assumed to have shape `stored_shape`.
pub fn query_rectangle(seq: &CellSequence, q: &CanonicalSeries, rho: Radius, stored_shape: Shape) -> Result<Rect> {
    if !q.shape().admits(q.values()) {
        return Err(Error::ShapeViolation(format!(
            "query `{}` does not follow its {:?} shape",
            q.source_id(),
            q.shape()
        )));
    }
    if q.len() != seq.y_edges + 1 {
        return Err(Error::DimensionMismatch {
            expected: seq.y_edges + 1,
            found: q.len(),
        });
    }
    Ok(constraint_rect(seq, q.values(), rho, stored_shape))
}
