//! Rectangle stabbing.
//!
//! The tree backend is a segment tree over the first dimension whose nodes
//! hold nested structures for the following dimensions, up to a fixed
//! nesting depth after which candidates are scanned. Endpoints are
//! compressed into alternating "point" and "gap" slots so closed intervals
//! and infinite bounds map onto contiguous slot ranges. Nodes with few
//! rectangles are scanned directly.

use serde::{Deserialize, Serialize};

use super::{check_unique, Backend, Interval, Rect, LEAF_SIZE, TREE_DEPTH};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;
/// Tag bit of a child reference pointing into `lists` instead of `segs`.
const LIST: u32 = 1 << 31;

/// Segment tree over coordinate `dim`. `nodes[n]` refers to the structure
/// for the rectangles canonically stored at node `n`, on the next
/// coordinate.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Seg {
    dim: u32,
    coords: Vec<f64>,
    leaves: u32,
    nodes: Vec<u32>,
}

/// Reports every stored rectangle containing a query point, each once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabIndex {
    dim: usize,
    backend: Backend,
    ids: Vec<u32>,
    bounds: Vec<Interval>,
    root: u32,
    segs: Vec<Seg>,
    /// `(start, len)` ranges of `pool`. A list reached at depth `d` still
    /// has coordinates `d..` to check, none once `d` equals the dimension.
    lists: Vec<(u32, u32)>,
    pool: Vec<u32>,
}

impl StabIndex {
    pub fn build(dim: usize, rects: Vec<(Rect, u32)>, backend: Backend) -> Result<Self> {
        check_unique(rects.iter().map(|(_, id)| *id))?;
        let mut ids = Vec::with_capacity(rects.len());
        let mut bounds = Vec::with_capacity(rects.len() * dim);
        for (rect, id) in rects {
            if rect.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: rect.dim(),
                });
            }
            if rect.is_empty() {
                return Err(Error::EmptyRectangle(id));
            }
            ids.push(id);
            bounds.extend_from_slice(rect.intervals());
        }
        let mut index = Self {
            dim,
            backend,
            ids,
            bounds,
            root: NONE,
            segs: Vec::new(),
            lists: Vec::new(),
            pool: Vec::new(),
        };
        if backend == Backend::Tree && !index.ids.is_empty() && dim > 0 {
            let all: Vec<u32> = (0..index.ids.len() as u32).collect();
            let mut arena = Arena::default();
            index.root = arena.build(&index.bounds, dim, all, 0);
            index.segs = arena.segs;
            index.lists = arena.lists;
            index.pool = arena.pool;
        }
        Ok(index)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Number of rectangle references held by the tree levels.
    pub fn stored_entries(&self) -> usize {
        self.pool.len().max(self.ids.len())
    }

    fn rect_bounds(&self, r: u32) -> &[Interval] {
        let start = r as usize * self.dim;
        &self.bounds[start..start + self.dim]
    }

    /// Calls `f` with the id of every rectangle containing `p`.
    pub fn stab_each(&self, p: &[f64], mut f: impl FnMut(u32)) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.len(),
            });
        }
        if self.ids.is_empty() {
            return Ok(());
        }
        if self.dim == 0 {
            self.ids.iter().copied().for_each(f);
            return Ok(());
        }
        match self.backend {
            Backend::Naive => {
                for r in 0..self.ids.len() as u32 {
                    if contains_from(self.rect_bounds(r), p, 0) {
                        f(self.ids[r as usize]);
                    }
                }
            }
            Backend::Tree => self.visit(self.root, 0, p, &mut f),
        }
        Ok(())
    }

    /// Sorted ids of every rectangle containing `p`.
    pub fn stab(&self, p: &[f64]) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        self.stab_each(p, |id| out.push(id))?;
        out.sort_unstable();
        Ok(out)
    }

    fn visit(&self, child: u32, depth: usize, p: &[f64], f: &mut impl FnMut(u32)) {
        if child & LIST != 0 {
            let (start, len) = self.lists[(child & !LIST) as usize];
            for &r in &self.pool[start as usize..(start + len) as usize] {
                if depth == self.dim || contains_from(self.rect_bounds(r), p, depth) {
                    f(self.ids[r as usize]);
                }
            }
            return;
        }
        let seg = &self.segs[child as usize];
        let slot = point_slot(&seg.coords, p[seg.dim as usize]);
        let mut node = 1usize;
        let (mut lo, mut hi) = (0u32, seg.leaves);
        loop {
            let next = seg.nodes[node];
            if next != NONE {
                self.visit(next, depth + 1, p, f);
            }
            if hi - lo == 1 {
                break;
            }
            let mid = lo + (hi - lo) / 2;
            if slot < mid {
                node *= 2;
                hi = mid;
            } else {
                node = node * 2 + 1;
                lo = mid;
            }
        }
    }
}

#[inline]
fn contains_from(bounds: &[Interval], p: &[f64], from: usize) -> bool {
    bounds[from..].iter().zip(&p[from..]).all(|(iv, &x)| iv.contains(x))
}

/// Slot of `x`: `2k + 1` if `x == coords[k]`, otherwise `2k` where `k` is
/// the number of coordinates below `x`.
#[inline]
fn point_slot(coords: &[f64], x: f64) -> u32 {
    let k = coords.partition_point(|&c| c < x);
    if k < coords.len() && coords[k] == x {
        (2 * k + 1) as u32
    } else {
        (2 * k) as u32
    }
}

#[derive(Default)]
struct Arena {
    segs: Vec<Seg>,
    lists: Vec<(u32, u32)>,
    pool: Vec<u32>,
}

impl Arena {
    fn list(&mut self, rects: &[u32]) -> u32 {
        let at = self.lists.len() as u32;
        self.lists.push((self.pool.len() as u32, rects.len() as u32));
        self.pool.extend_from_slice(rects);
        at | LIST
    }

    /// Structure for `rects` on coordinates `d..`; returns a child reference.
    fn build(&mut self, bounds: &[Interval], dim: usize, rects: Vec<u32>, d: usize) -> u32 {
        if d == dim || rects.len() <= LEAF_SIZE || d >= TREE_DEPTH {
            return self.list(&rects);
        }
        let iv = |r: u32| bounds[r as usize * dim + d];
        let mut coords: Vec<f64> = rects.iter().flat_map(|&r| [iv(r).lo, iv(r).hi]).filter(|x| x.is_finite()).collect();
        coords.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        coords.dedup();
        let slots = 2 * coords.len() + 1;
        let leaves = slots.next_power_of_two();
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); 2 * leaves];
        for &r in &rects {
            let Interval { lo, hi } = iv(r);
            let a = if lo == f64::NEG_INFINITY {
                0
            } else {
                point_slot(&coords, lo) as usize
            };
            let b = if hi == f64::INFINITY {
                slots - 1
            } else {
                point_slot(&coords, hi) as usize
            };
            insert_canonical(&mut buckets, 1, 0, leaves, a, b + 1, r);
        }
        drop(rects);
        let at = self.segs.len();
        self.segs.push(Seg {
            dim: d as u32,
            coords,
            leaves: leaves as u32,
            nodes: Vec::new(),
        });
        let mut nodes = vec![NONE; 2 * leaves];
        for (n, bucket) in buckets.into_iter().enumerate() {
            if !bucket.is_empty() {
                nodes[n] = self.build(bounds, dim, bucket, d + 1);
            }
        }
        self.segs[at].nodes = nodes;
        at as u32
    }
}

/// Adds `r` to the canonical nodes covering slots `[a, b)`.
fn insert_canonical(lists: &mut [Vec<u32>], node: usize, lo: usize, hi: usize, a: usize, b: usize, r: u32) {
    if b <= lo || hi <= a {
        return;
    }
    if a <= lo && hi <= b {
        lists[node].push(r);
        return;
    }
    let mid = lo + (hi - lo) / 2;
    insert_canonical(lists, 2 * node, lo, mid, a, b, r);
    insert_canonical(lists, 2 * node + 1, mid, hi, a, b, r);
}
