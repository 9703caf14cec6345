//! End-to-end query engines.
//!
//! [`FrechetIndex`] turns each stored series into one rectangle per valid
//! cell sequence and query shape; a query stabs the structures whose
//! forward/backward requirements its own profile meets. [`PointStoreIndex`]
//! swaps the roles: stored series become points, filtered by their own
//! profiles, and each query builds one rectangle per cell sequence.
//!
//! Both engines split stored series by shape. W-shaped series are mirrored
//! into an M-shaped bucket and queried with the mirrored query, so every
//! stored edge orientation is fixed by parity.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cells::{build_rectangle, enumerate_valid, fb_requirements, fb_requirements_for, query_rectangle, CellSequence, FbRequirement};
use crate::error::{Error, Result};
use crate::freespace::decide_frechet;
use crate::geom::{Backend, RangeIndex, StabIndex};
use crate::predicates::fb_profile;
use crate::series::{canonical_len, canonicalize, CanonicalSeries, Radius, Shape, TimeSeries};

/// Build-time summary of an engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexStats {
    pub n: usize,
    pub t_q: usize,
    pub t_s: usize,
    pub cell_sequences: usize,
    pub structures: usize,
    /// Rectangles (stabbing engine) or points (point store) inserted.
    pub stored_objects: usize,
}

fn check_ids(series: &[TimeSeries]) -> Result<()> {
    let mut seen = HashSet::new();
    for ts in series {
        if !seen.insert(ts.id()) {
            return Err(Error::DuplicateId(ts.id().to_string()));
        }
    }
    Ok(())
}

fn check_complexity(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::InvalidComplexity(t))
    } else {
        Ok(())
    }
}

/// Largest canonical length in `series`, at least 2.
fn stored_complexity(series: &[TimeSeries]) -> usize {
    series.iter().map(canonical_len).max().unwrap_or(2).max(2)
}

/// Canonical M-shaped forms of `series` padded to `t_s`, with bucket tags.
fn stored_forms(series: &[TimeSeries], t_s: usize) -> Result<Vec<(Shape, CanonicalSeries)>> {
    series
        .iter()
        .map(|ts| {
            let c = canonicalize(ts, t_s)?;
            Ok((c.shape(), c.to_m_shape()))
        })
        .collect()
}

/// Canonical query form for each bucket: as-is for M, mirrored for W.
fn query_forms(q: &TimeSeries, t_q: usize) -> Result<[CanonicalSeries; 2]> {
    let c = canonicalize(q, t_q)?;
    let m = c.mirror();
    Ok([c, m])
}

fn sorted_ids(series: &[TimeSeries], hits: HashSet<u32>) -> Vec<&str> {
    let mut out: Vec<&str> = hits.into_iter().map(|k| series[k as usize].id()).collect();
    out.sort_unstable();
    out
}

/// Stabbing-based engine over rectangles in query space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrechetIndex {
    rho: Radius,
    t_q: usize,
    t_s: usize,
    backend: Backend,
    series: Vec<TimeSeries>,
    sequences: Vec<CellSequence>,
    requirements: Vec<FbRequirement>,
    /// Indexed by `slot(bucket, query_shape, sequence)`.
    structures: Vec<StabIndex>,
}

impl FrechetIndex {
    pub fn build(series: &[TimeSeries], rho: Radius, t_q: usize, backend: Backend, cap: u64) -> Result<Self> {
        check_complexity(t_q)?;
        check_ids(series)?;
        let t_s = stored_complexity(series);
        let forms = stored_forms(series, t_s)?;
        let sequences = enumerate_valid(t_q, t_s, cap)?;
        let requirements = sequences.iter().map(fb_requirements).collect();
        let mut structures = Vec::with_capacity(4 * sequences.len());
        for bucket in Shape::BOTH {
            for query_shape in Shape::BOTH {
                for seq in &sequences {
                    let mut rects = Vec::new();
                    for (k, (b, s)) in forms.iter().enumerate() {
                        if *b != bucket {
                            continue;
                        }
                        let rect = build_rectangle(seq, s, rho, query_shape)?;
                        if !rect.is_empty() {
                            rects.push((rect, k as u32));
                        }
                    }
                    structures.push(StabIndex::build(t_q, rects, backend)?);
                }
            }
        }
        Ok(Self {
            rho,
            t_q,
            t_s,
            backend,
            series: series.to_vec(),
            sequences,
            requirements,
            structures,
        })
    }

    fn slot(&self, bucket: Shape, query_shape: Shape, seq: usize) -> usize {
        (bucket.index() * 2 + query_shape.index()) * self.sequences.len() + seq
    }

    /// Ids of all stored series within Fréchet distance `rho` of `q`,
    /// sorted.
    pub fn query(&self, q: &TimeSeries) -> Result<Vec<&str>> {
        let forms = query_forms(q, self.t_q)?;
        let mut hits = HashSet::new();
        if self.series.is_empty() {
            return Ok(Vec::new());
        }
        for bucket in Shape::BOTH {
            let qv = &forms[bucket.index()];
            let profile = fb_profile(qv.values(), self.rho);
            for (c, req) in self.requirements.iter().enumerate() {
                if !req.satisfied_by(&profile) {
                    continue;
                }
                self.structures[self.slot(bucket, qv.shape(), c)].stab_each(qv.values(), |k| {
                    hits.insert(k);
                })?;
            }
        }
        Ok(sorted_ids(&self.series, hits))
    }

    pub fn rho(&self) -> Radius {
        self.rho
    }

    pub fn t_q(&self) -> usize {
        self.t_q
    }

    pub fn t_s(&self) -> usize {
        self.t_s
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats {
            n: self.series.len(),
            t_q: self.t_q,
            t_s: self.t_s,
            cell_sequences: self.sequences.len(),
            structures: self.structures.len(),
            stored_objects: self.structures.iter().map(StabIndex::len).sum(),
        }
    }
}

/// Range-reporting engine: stored series are points in `t_s` dimensions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointStoreIndex {
    rho: Radius,
    t_q: usize,
    t_s: usize,
    backend: Backend,
    series: Vec<TimeSeries>,
    /// Sequences over the grid of a stored series (columns) against the
    /// query (rows).
    sequences: Vec<CellSequence>,
    /// Indexed by `slot(bucket, query_shape, sequence)`.
    structures: Vec<RangeIndex>,
}

impl PointStoreIndex {
    pub fn build(series: &[TimeSeries], rho: Radius, t_q: usize, backend: Backend, cap: u64) -> Result<Self> {
        check_complexity(t_q)?;
        check_ids(series)?;
        let t_s = stored_complexity(series);
        let forms = stored_forms(series, t_s)?;
        let profiles: Vec<_> = forms.iter().map(|(_, s)| fb_profile(s.values(), rho)).collect();
        let sequences = enumerate_valid(t_s, t_q, cap)?;
        let mut structures = Vec::with_capacity(4 * sequences.len());
        for bucket in Shape::BOTH {
            for query_shape in Shape::BOTH {
                for seq in &sequences {
                    let req = fb_requirements_for(seq, query_shape);
                    let points = forms
                        .iter()
                        .zip(&profiles)
                        .enumerate()
                        .filter(|(_, ((b, _), prof))| *b == bucket && req.satisfied_by(prof))
                        .map(|(k, ((_, s), _))| (s.values().to_vec(), k as u32))
                        .collect();
                    structures.push(RangeIndex::build(t_s, points, backend)?);
                }
            }
        }
        Ok(Self {
            rho,
            t_q,
            t_s,
            backend,
            series: series.to_vec(),
            sequences,
            structures,
        })
    }

    fn slot(&self, bucket: Shape, query_shape: Shape, seq: usize) -> usize {
        (bucket.index() * 2 + query_shape.index()) * self.sequences.len() + seq
    }

    /// Ids of all stored series within Fréchet distance `rho` of `q`,
    /// sorted.
    pub fn query(&self, q: &TimeSeries) -> Result<Vec<&str>> {
        let forms = query_forms(q, self.t_q)?;
        let mut hits = HashSet::new();
        if self.series.is_empty() {
            return Ok(Vec::new());
        }
        for bucket in Shape::BOTH {
            let qv = &forms[bucket.index()];
            for (c, seq) in self.sequences.iter().enumerate() {
                let idx = &self.structures[self.slot(bucket, qv.shape(), c)];
                if idx.is_empty() {
                    continue;
                }
                let rect = query_rectangle(seq, qv, self.rho, Shape::M)?;
                idx.query_each(&rect, |k| {
                    hits.insert(k);
                })?;
            }
        }
        Ok(sorted_ids(&self.series, hits))
    }

    pub fn rho(&self) -> Radius {
        self.rho
    }

    pub fn t_q(&self) -> usize {
        self.t_q
    }

    pub fn t_s(&self) -> usize {
        self.t_s
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats {
            n: self.series.len(),
            t_q: self.t_q,
            t_s: self.t_s,
            cell_sequences: self.sequences.len(),
            structures: self.structures.len(),
            stored_objects: self.structures.iter().map(RangeIndex::len).sum(),
        }
    }
}

/// Linear scan with the decision procedure; the reference answer.
pub fn naive_query<'a>(series: &'a [TimeSeries], q: &TimeSeries, rho: Radius) -> Vec<&'a str> {
    let mut out: Vec<&str> = series
        .iter()
        .filter(|s| decide_frechet(q.values(), s.values(), rho))
        .map(TimeSeries::id)
        .collect();
    out.sort_unstable();
    out
}
