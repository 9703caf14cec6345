//! Free-space reachability: the Fréchet decision procedure and its
//! restriction to a single cell sequence.
//!
//! Cell `(i, j)` spans q-edge `i` and s-edge `j` (both 1-based). The left
//! boundary of the cell lies on the vertical line through q-vertex `i` and
//! runs along s-edge `j`; the bottom boundary lies on the horizontal line
//! through s-vertex `j` and runs along q-edge `i`. The free part of a cell is
//! convex, so each boundary carries a single closed interval, and every free
//! point of the right or top boundary is reachable from a reachable point of
//! the left or bottom boundary that is not ahead of it.

use crate::cells::CellSequence;
use crate::error::{Error, Result};
use crate::exact::{within, DirectedEdge, EdgeSpan};
use crate::series::Radius;

/// Reachable part of one cell boundary.
type Reach = Option<EdgeSpan>;

struct Grid<'a> {
    q: &'a [f64],
    s: &'a [f64],
    rho: f64,
}

impl Grid<'_> {
    /// Free part of the vertical boundary through q-vertex `i` on s-edge `j`.
    fn vertical(&self, i: usize, j: usize) -> (DirectedEdge, Reach) {
        let edge = DirectedEdge::new(self.s[j - 1], self.s[j]);
        (edge, edge.free_span(self.q[i - 1], self.rho))
    }

    /// Free part of the horizontal boundary through s-vertex `j` on q-edge `i`.
    fn horizontal(&self, i: usize, j: usize) -> (DirectedEdge, Reach) {
        let edge = DirectedEdge::new(self.q[i - 1], self.q[i]);
        (edge, edge.free_span(self.s[j - 1], self.rho))
    }

    fn endpoints_free(&self) -> bool {
        within(self.q[0], self.s[0], self.rho) && within(self.q[self.q.len() - 1], self.s[self.s.len() - 1], self.rho)
    }

    /// Exit through the right boundary of cell `(i, j)`.
    fn exit_right(&self, i: usize, j: usize, left: Reach, bottom: Reach) -> Reach {
        let (_, free) = self.vertical(i + 1, j);
        let free = free?;
        if bottom.is_some() {
            return Some(free);
        }
        let entry = left?;
        let lo = free.lo.max(entry.lo, self.rho);
        lo.le(free.hi, self.rho).then_some(EdgeSpan { lo, hi: free.hi })
    }

    /// Exit through the top boundary of cell `(i, j)`.
    fn exit_top(&self, i: usize, j: usize, left: Reach, bottom: Reach) -> Reach {
        let (_, free) = self.horizontal(i, j + 1);
        let free = free?;
        if left.is_some() {
            return Some(free);
        }
        let entry = bottom?;
        let lo = free.lo.max(entry.lo, self.rho);
        lo.le(free.hi, self.rho).then_some(EdgeSpan { lo, hi: free.hi })
    }

    /// Whether the reachable span covers the far end of its edge.
    fn reaches_end(edge: &DirectedEdge, span: Reach, rho: f64) -> bool {
        span.is_some_and(|sp| edge.end().le(sp.hi, rho))
    }
}

/// Decides whether the continuous Fréchet distance between `q` and `s` is at
/// most `rho`, by monotone reachability over cell boundaries in
/// `O(|q| * |s|)` time.
///
/// Both slices need at least two finite values.
#[allow(clippy::needless_range_loop)] // 1-based grid indices
pub fn decide_frechet(q: &[f64], s: &[f64], rho: Radius) -> bool {
    assert!(q.len() >= 2 && s.len() >= 2, "curves need two vertices");
    let g = Grid { q, s, rho: rho.get() };
    if !g.endpoints_free() {
        return false;
    }
    let qe = q.len() - 1;
    let se = s.len() - 1;

    // left[j]: reachable part of the left boundary of the current column's
    // cell in row j. Column 1 is reachable along x = 1 while the free space
    // stays connected from the start corner.
    let mut left: Vec<Reach> = vec![None; se + 1];
    for j in 1..=se {
        let (edge, free) = g.vertical(1, j);
        left[j] = free;
        if !Grid::reaches_end(&edge, free, g.rho) {
            break;
        }
    }

    // Bottom boundary of row 1 behaves the same way along y = 1.
    let mut bottom_row1: Vec<Reach> = vec![None; qe + 1];
    for i in 1..=qe {
        let (edge, free) = g.horizontal(i, 1);
        bottom_row1[i] = free;
        if !Grid::reaches_end(&edge, free, g.rho) {
            break;
        }
    }

    for i in 1..=qe {
        let mut bottom = bottom_row1[i];
        let mut right: Vec<Reach> = vec![None; se + 1];
        for j in 1..=se {
            let l = left[j];
            right[j] = g.exit_right(i, j, l, bottom);
            bottom = g.exit_top(i, j, l, bottom);
        }
        if i == qe {
            let (edge, _) = g.vertical(qe + 1, se);
            let via_right = Grid::reaches_end(&edge, right[se], g.rho);
            let (tedge, _) = g.horizontal(qe, se + 1);
            return via_right || Grid::reaches_end(&tedge, bottom, g.rho);
        }
        left = right;
    }
    unreachable!("loop returns on the last column")
}

/// Decides whether some feasible path traverses exactly the cells of `cells`.
pub fn feasible_for_sequence(cells: &CellSequence, q: &[f64], s: &[f64], rho: Radius) -> Result<bool> {
    if cells.x_edges() + 1 != q.len() {
        return Err(Error::DimensionMismatch {
            expected: cells.x_edges() + 1,
            found: q.len(),
        });
    }
    if cells.y_edges() + 1 != s.len() {
        return Err(Error::DimensionMismatch {
            expected: cells.y_edges() + 1,
            found: s.len(),
        });
    }
    let g = Grid { q, s, rho: rho.get() };
    if !g.endpoints_free() {
        return Ok(false);
    }
    let seq = cells.cells();
    // The start corner is free, so both boundaries through it are non-empty;
    // entering on both sides lets every free point of the far sides through.
    let (_, mut left) = g.vertical(1, 1);
    let (_, mut bottom) = g.horizontal(1, 1);
    for w in seq.windows(2) {
        let (cur, next) = (w[0], w[1]);
        if next.i == cur.i + 1 {
            left = g.exit_right(cur.i, cur.j, left, bottom);
            bottom = None;
            if left.is_none() {
                return Ok(false);
            }
        } else {
            bottom = g.exit_top(cur.i, cur.j, left, bottom);
            left = None;
            if bottom.is_none() {
                return Ok(false);
            }
        }
    }
    // The end corner dominates every point of the last cell.
    Ok(left.is_some() || bottom.is_some())
}
