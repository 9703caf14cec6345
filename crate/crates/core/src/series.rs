//! Time series, alternation canonicalization, padding and mirroring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A one-dimensional polygonal curve: at least two finite vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    id: String,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(id: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let id = id.into();
        validate_values(&id, &values)?;
        Ok(Self { id, values })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise negation.
    pub fn mirror(&self) -> Self {
        Self {
            id: self.id.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn into_parts(self) -> (String, Vec<f64>) {
        (self.id, self.values)
    }
}

fn validate_values(id: &str, values: &[f64]) -> Result<()> {
    if values.len() < 2 {
        return Err(Error::InvalidSeries {
            id: id.to_owned(),
            reason: format!("needs at least 2 vertices, got {}", values.len()),
        });
    }
    if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidSeries {
            id: id.to_owned(),
            reason: format!("vertex {} is not finite", pos + 1),
        });
    }
    Ok(())
}

/// Distance threshold of a query structure.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Radius(f64);

impl Radius {
    pub fn new(rho: f64) -> Result<Self> {
        if rho.is_finite() && rho >= 0.0 {
            Ok(Self(rho))
        } else {
            Err(Error::InvalidRadius(rho))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Orientation pattern of an alternating series.
///
/// Edges are numbered from 1. An `M` series has non-decreasing odd edges and
/// non-increasing even edges; `W` is the reverse. Flat edges fit both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    M,
    W,
}

impl Shape {
    pub const BOTH: [Shape; 2] = [Shape::M, Shape::W];

    pub fn flip(self) -> Self {
        match self {
            Shape::M => Shape::W,
            Shape::W => Shape::M,
        }
    }

    /// Whether edge `edge` (1-based) is non-decreasing under this shape.
    #[inline]
    pub fn edge_rises(self, edge: usize) -> bool {
        (edge % 2 == 1) == (self == Shape::M)
    }

    /// Position in `Shape::BOTH`.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Shape::M => 0,
            Shape::W => 1,
        }
    }

    /// Whether `values` follows this shape's edge orientations.
    pub fn admits(self, values: &[f64]) -> bool {
        values
            .windows(2)
            .enumerate()
            .all(|(e, w)| if self.edge_rises(e + 1) { w[0] <= w[1] } else { w[0] >= w[1] })
    }
}

/// An alternation-canonical series padded to a fixed complexity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalSeries {
    source_id: String,
    values: Vec<f64>,
    shape: Shape,
    canonical_len: usize,
}

impl CanonicalSeries {
    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Number of vertices before padding.
    pub fn canonical_len(&self) -> usize {
        self.canonical_len
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise negation; the shape flips.
    pub fn mirror(&self) -> Self {
        Self {
            source_id: self.source_id.clone(),
            values: self.values.iter().map(|v| -v).collect(),
            shape: self.shape.flip(),
            canonical_len: self.canonical_len,
        }
    }

    /// This series in M orientation: itself if M-shaped, mirrored otherwise.
    pub fn to_m_shape(&self) -> Self {
        match self.shape {
            Shape::M => self.clone(),
            Shape::W => self.mirror(),
        }
    }

    /// Re-wrap as a plain time series with the source id.
    pub fn to_time_series(&self) -> TimeSeries {
        TimeSeries {
            id: self.source_id.clone(),
            values: self.values.clone(),
        }
    }
}

/// Removes every vertex lying weakly inside a monotone run. The result has
/// strictly alternating edges, except for a flat series which collapses to
/// two equal vertices.
pub fn alternation_reduce(values: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for &v in values {
        while out.len() >= 2 {
            let a = out[out.len() - 2];
            let b = out[out.len() - 1];
            if (a <= b && b <= v) || (a >= b && b >= v) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(v);
    }
    out
}

/// Canonicalizes `ts` and pads it to exactly `target` vertices by repeating
/// the final value.
pub fn canonicalize(ts: &TimeSeries, target: usize) -> Result<CanonicalSeries> {
    if target < 2 {
        return Err(Error::InvalidComplexity(target));
    }
    validate_values(&ts.id, &ts.values)?;
    let mut values = alternation_reduce(&ts.values);
    let canonical_len = values.len();
    if canonical_len > target {
        return Err(Error::CanonicalTooLong {
            id: ts.id.clone(),
            canonical_len,
            target,
        });
    }
    let shape = match values[0].partial_cmp(&values[1]) {
        Some(std::cmp::Ordering::Greater) => Shape::W,
        _ => Shape::M,
    };
    let last = values[canonical_len - 1];
    values.resize(target, last);
    Ok(CanonicalSeries {
        source_id: ts.id.clone(),
        values,
        shape,
        canonical_len,
    })
}

/// Canonical complexity of `ts` without padding.
pub fn canonical_len(ts: &TimeSeries) -> usize {
    alternation_reduce(&ts.values).len()
}
