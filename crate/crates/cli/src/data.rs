//! JSON-lines datasets.

use std::io::BufRead;
use std::path::Path;

use frechet_range::TimeSeries;
use serde::{Deserialize, Serialize};

use crate::{CmdResult, Failure};

/// One line of a dataset or query file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetRecord {
    pub id: String,
    pub values: Vec<f64>,
}

impl From<&TimeSeries> for DatasetRecord {
    fn from(ts: &TimeSeries) -> Self {
        Self {
            id: ts.id().to_string(),
            values: ts.values().to_vec(),
        }
    }
}

/// Reads every non-blank line of `path` as a series.
pub fn read_series(path: &Path) -> CmdResult<Vec<TimeSeries>> {
    let file = std::fs::File::open(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (k, line) in std::io::BufReader::new(file).lines().enumerate() {
        let at = || format!("{}:{}", path.display(), k + 1);
        let line = line.map_err(|e| Failure::input(format!("{}: {e}", at())))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: DatasetRecord = serde_json::from_str(&line).map_err(|e| Failure::input(format!("{}: {e}", at())))?;
        let ts = TimeSeries::new(rec.id, rec.values).map_err(|e| Failure::input(format!("{}: {e}", at())))?;
        out.push(ts);
    }
    Ok(out)
}
