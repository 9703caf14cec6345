//! Axis-aligned rectangles and the two reporting problems built on them:
//! rectangle stabbing and orthogonal range reporting.
//!
//! Both come with a linear-scan backend and a multi-level tree backend that
//! must report identical id sets.

mod range;
mod rect;
mod stab;

pub use range::RangeIndex;
pub use rect::{Interval, Rect};
pub use stab::StabIndex;

use serde::{Deserialize, Serialize};

/// Which implementation backs an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Backend {
    /// Linear scan over every stored object.
    Naive,
    /// Multi-level segment tree (stabbing) or range tree (points).
    Tree,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Naive => "naive",
            Backend::Tree => "tree",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Backend::Naive),
            "tree" => Ok(Backend::Tree),
            other => Err(format!("unknown backend `{other}` (expected naive or tree)")),
        }
    }
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Nodes holding at most this many objects are scanned instead of nested.
pub(crate) const LEAF_SIZE: usize = 16;

/// Coordinates handled by nested tree levels; any further coordinates are
/// checked by scanning the candidates of the innermost level. Full nesting
/// costs a log factor of space per coordinate, which is prohibitive for
/// hundreds of thousands of objects in four or more dimensions.
pub(crate) const TREE_DEPTH: usize = 2;

fn check_unique(ids: impl Iterator<Item = u32>) -> crate::Result<()> {
    let mut seen = std::collections::HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(crate::Error::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}
