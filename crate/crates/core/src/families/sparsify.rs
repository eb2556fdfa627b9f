use serde::{Deserialize, Serialize};

use super::ComponentRecord;
use crate::error::{Error, Result};

/// Records whose girths outrun the sizes before them:
/// `girth(next) > size(prev)` and sizes strictly increase.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SparsifiedSequence {
    records: Vec<ComponentRecord>,
    /// `size(next) / size(prev)` for each consecutive pair. Informational:
    /// a finite prefix cannot show the ratios growing without bound.
    pub ratios: Vec<f64>,
}

impl SparsifiedSequence {
    pub fn new(records: Vec<ComponentRecord>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::precondition("a sparsified sequence needs a record"));
        }
        for w in records.windows(2) {
            if w[1].size <= w[0].size {
                return Err(Error::precondition(format!(
                    "sizes not increasing: {} ({}) then {} ({})",
                    w[0].name, w[0].size, w[1].name, w[1].size
                )));
            }
            if !w[1].girth.exceeds(w[0].size) {
                return Err(Error::precondition(format!(
                    "girth of {} is {}, not above |{}| = {}",
                    w[1].name, w[1].girth, w[0].name, w[0].size
                )));
            }
        }
        let ratios = records
            .windows(2)
            .map(|w| w[1].size as f64 / w[0].size as f64)
            .collect();
        Ok(SparsifiedSequence { records, ratios })
    }

    pub fn records(&self) -> &[ComponentRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The record at a 1-based index.
    pub fn get(&self, index: usize) -> Option<&ComponentRecord> {
        index.checked_sub(1).and_then(|i| self.records.get(i))
    }
}

/// Greedy subsequence: keep the first record, then every record whose girth
/// exceeds the size of the last one kept. Input is stably sorted by size.
pub fn sparsify_for_girth(mut records: Vec<ComponentRecord>) -> Result<SparsifiedSequence> {
    records.sort_by_key(|r| r.size);
    let mut kept: Vec<ComponentRecord> = Vec::new();
    for r in records {
        match kept.last() {
            Some(last) if !(r.size > last.size && r.girth.exceeds(last.size)) => {}
            _ => kept.push(r),
        }
    }
    SparsifiedSequence::new(kept)
}
