//! Orthogonal range reporting over points.
//!
//! The tree backend is a layered range tree: every level keeps its points
//! sorted by one coordinate, and each node of the implicit segment tree over
//! those positions links to a level for the next coordinate. The innermost
//! level answers its coordinate by binary search on a sorted array and
//! filters any remaining coordinates by scanning.

use serde::{Deserialize, Serialize};

use super::{check_unique, Backend, Interval, Rect, LEAF_SIZE, TREE_DEPTH};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Level {
    dim: u32,
    /// Point slots sorted by coordinate `dim`.
    pts: Vec<u32>,
    keys: Vec<f64>,
    leaves: u32,
    /// Arena index of the next-coordinate level per node, `NONE` when the
    /// node is small enough to scan. Empty on the innermost level, which
    /// answers its coordinate by binary search and scans for the rest.
    nodes: Vec<u32>,
}

/// Reports the ids of all stored points inside a closed query box.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RangeIndex {
    dim: usize,
    backend: Backend,
    ids: Vec<u32>,
    coords: Vec<f64>,
    levels: Vec<Level>,
}

impl RangeIndex {
    pub fn build(dim: usize, points: Vec<(Vec<f64>, u32)>, backend: Backend) -> Result<Self> {
        check_unique(points.iter().map(|(_, id)| *id))?;
        let mut ids = Vec::with_capacity(points.len());
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (p, id) in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if let Some(bad) = p.iter().find(|x| x.is_nan()) {
                return Err(Error::IndexOutOfRange(format!("point {id} has coordinate {bad}")));
            }
            ids.push(id);
            coords.extend_from_slice(&p);
        }
        let mut index = Self {
            dim,
            backend,
            ids,
            coords,
            levels: Vec::new(),
        };
        if backend == Backend::Tree && !index.ids.is_empty() && dim > 0 {
            let all: Vec<u32> = (0..index.ids.len() as u32).collect();
            let mut levels = Vec::new();
            build_level(&index.coords, dim, all, 0, &mut levels);
            index.levels = levels;
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

    fn point(&self, slot: u32) -> &[f64] {
        let start = slot as usize * self.dim;
        &self.coords[start..start + self.dim]
    }

    /// Calls `f` with the id of every point in `rect`.
    pub fn query_each(&self, rect: &Rect, mut f: impl FnMut(u32)) -> Result<()> {
        if rect.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rect.dim(),
            });
        }
        if self.ids.is_empty() || rect.is_empty() {
            return Ok(());
        }
        if self.dim == 0 {
            self.ids.iter().copied().for_each(f);
            return Ok(());
        }
        let ivs = rect.intervals();
        match self.backend {
            Backend::Naive => {
                for s in 0..self.ids.len() as u32 {
                    if inside_from(ivs, self.point(s), 0) {
                        f(self.ids[s as usize]);
                    }
                }
            }
            Backend::Tree => self.query_level(0, ivs, &mut f),
        }
        Ok(())
    }

    /// Sorted ids of every point in `rect`.
    pub fn query(&self, rect: &Rect) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        self.query_each(rect, |id| out.push(id))?;
        out.sort_unstable();
        Ok(out)
    }

    fn query_level(&self, level: u32, ivs: &[Interval], f: &mut impl FnMut(u32)) {
        let lv = &self.levels[level as usize];
        let d = lv.dim as usize;
        let a = lv.keys.partition_point(|&k| k < ivs[d].lo);
        let b = lv.keys.partition_point(|&k| k <= ivs[d].hi);
        if a >= b {
            return;
        }
        if lv.nodes.is_empty() {
            if d + 1 == self.dim {
                for &s in &lv.pts[a..b] {
                    f(self.ids[s as usize]);
                }
            } else {
                for &s in &lv.pts[a..b] {
                    if inside_from(ivs, self.point(s), d + 1) {
                        f(self.ids[s as usize]);
                    }
                }
            }
            return;
        }
        self.visit(lv, 1, 0, lv.leaves as usize, a, b, ivs, f);
    }

    #[allow(clippy::too_many_arguments)]
    fn visit(&self, lv: &Level, node: usize, lo: usize, hi: usize, a: usize, b: usize, ivs: &[Interval], f: &mut impl FnMut(u32)) {
        if b <= lo || hi <= a {
            return;
        }
        if a <= lo && hi <= b {
            let child = lv.nodes[node];
            if child != NONE {
                self.query_level(child, ivs, f);
            } else {
                let end = hi.min(lv.pts.len());
                let next = lv.dim as usize + 1;
                for &s in &lv.pts[lo..end] {
                    if inside_from(ivs, self.point(s), next) {
                        f(self.ids[s as usize]);
                    }
                }
            }
            return;
        }
        let mid = lo + (hi - lo) / 2;
        self.visit(lv, 2 * node, lo, mid, a, b, ivs, f);
        self.visit(lv, 2 * node + 1, mid, hi, a, b, ivs, f);
    }
}

#[inline]
fn inside_from(ivs: &[Interval], p: &[f64], from: usize) -> bool {
    ivs[from..].iter().zip(&p[from..]).all(|(iv, &x)| iv.contains(x))
}

fn build_level(coords: &[f64], dim: usize, mut pts: Vec<u32>, d: usize, levels: &mut Vec<Level>) -> u32 {
    let key = |s: u32| coords[s as usize * dim + d];
    pts.sort_by(|&x, &y| key(x).total_cmp(&key(y)).then(x.cmp(&y)));
    let keys: Vec<f64> = pts.iter().map(|&s| key(s)).collect();
    let leaves = pts.len().next_power_of_two();
    let at = levels.len() as u32;
    let last = d + 1 == dim.min(TREE_DEPTH);
    levels.push(Level {
        dim: d as u32,
        pts: Vec::new(),
        keys,
        leaves: leaves as u32,
        nodes: Vec::new(),
    });
    let mut nodes = Vec::new();
    if !last {
        nodes = vec![NONE; 2 * leaves];
        link_nodes(coords, dim, &pts, d, &mut nodes, 1, 0, leaves, levels);
    }
    let lv = &mut levels[at as usize];
    lv.pts = pts;
    lv.nodes = nodes;
    at
}

#[allow(clippy::too_many_arguments)]
fn link_nodes(
    coords: &[f64],
    dim: usize,
    pts: &[u32],
    d: usize,
    nodes: &mut [u32],
    node: usize,
    lo: usize,
    hi: usize,
    levels: &mut Vec<Level>,
) {
    let end = hi.min(pts.len());
    if lo >= end || end - lo <= LEAF_SIZE {
        return;
    }
    nodes[node] = build_level(coords, dim, pts[lo..end].to_vec(), d + 1, levels);
    let mid = lo + (hi - lo) / 2;
    link_nodes(coords, dim, pts, d, nodes, 2 * node, lo, mid, levels);
    link_nodes(coords, dim, pts, d, nodes, 2 * node + 1, mid, hi, levels);
}
