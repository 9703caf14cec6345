//! Range reporting for one-dimensional time series under the continuous
//! Fréchet distance.
//!
//! Stored series are canonicalized into alternating extrema, each valid
//! cell sequence of the free-space diagram turns a series into an
//! axis-aligned rectangle, and a query becomes a stabbing query against
//! those rectangles. Everything answers exactly: comparisons that decide
//! membership are carried out without rounding error.

mod error;
pub mod exact;
mod series;

pub mod cells;
pub mod engine;
pub mod freespace;
pub mod geom;
pub mod predicates;
pub mod reductions;
pub mod synth;

pub use cells::{CellSequence, DEFAULT_SEQUENCE_CAP};
pub use engine::{naive_query, FrechetIndex, IndexStats, PointStoreIndex};
pub use error::{Error, Result};
pub use freespace::decide_frechet;
pub use geom::{Backend, Interval, RangeIndex, Rect, StabIndex};
pub use series::{alternation_reduce, canonical_len, canonicalize, CanonicalSeries, Radius, Shape, TimeSeries};
