//! Behavioral model of the 256x8 dual-function RAM/CAM array: addressed
//! reads and writes in RAM mode, parallel byte search with match reporting
//! in CAM mode.
//!
//! Circuit-level effects (precharge, matchline discharge timing) are
//! abstracted away; their costs are parameters of the perf model. An array
//! starts zero-filled with `loaded == false` — reads and searches on an
//! unloaded array are permitted (hardware has residual state) but callers
//! that need a programmed table check `is_loaded()` first.

use crate::error::{Error, Result};

pub const ROWS: usize = 256;

/// Access counts for one array, dimensionless.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AccessCounters {
    pub reads: u64,
    pub writes: u64,
    pub searches: u64,
}

/// Row indices that matched a CAM search; always a subset of 0..=255,
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchResult {
    pattern: u8,
    matched_rows: Vec<u8>,
}

impl MatchResult {
    pub fn matched_rows(&self) -> &[u8] {
        &self.matched_rows
    }

    pub fn pattern(&self) -> u8 {
        self.pattern
    }

    pub fn len(&self) -> usize {
        self.matched_rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matched_rows.is_empty()
    }
}

/// The match encoder attached to the array periphery: a single matching
/// row encodes to its index byte. Zero matches signal a corrupted or
/// missing table entry; two or more signal non-bijective contents. Both
/// are hard errors rather than silent priority encoding.
pub fn encode_single_match(result: &MatchResult) -> Result<u8> {
    match result.matched_rows.as_slice() {
        [row] => Ok(*row),
        [] => Err(Error::NoMatch {
            pattern: result.pattern,
        }),
        rows => Err(Error::MultiMatch {
            pattern: result.pattern,
            count: rows.len(),
        }),
    }
}

#[derive(Clone, Debug)]
pub struct RaCamArray {
    rows: [u8; ROWS],
    loaded: bool,
    counters: AccessCounters,
}

impl Default for RaCamArray {
    fn default() -> Self {
        Self::new()
    }
}

impl RaCamArray {
    pub fn new() -> Self {
        RaCamArray {
            rows: [0; ROWS],
            loaded: false,
            counters: AccessCounters::default(),
        }
    }

    /// Program the full array and mark it loaded.
    pub fn load(&mut self, table: &[u8; ROWS]) {
        self.rows = *table;
        self.counters.writes += ROWS as u64;
        self.loaded = true;
    }

    pub fn is_loaded(&self) -> bool {
        self.loaded
    }

    pub fn rows(&self) -> &[u8; ROWS] {
        &self.rows
    }

    pub fn counters(&self) -> AccessCounters {
        self.counters
    }

    /// RAM-mode write.
    pub fn write_row(&mut self, addr: usize, value: u8) -> Result<()> {
        let row = self
            .rows
            .get_mut(addr)
            .ok_or(Error::Address {
                addr,
                capacity: ROWS,
            })?;
        *row = value;
        self.counters.writes += 1;
        Ok(())
    }

    /// RAM-mode read; non-destructive.
    pub fn read_row(&mut self, addr: usize) -> Result<u8> {
        let value = *self.rows.get(addr).ok_or(Error::Address {
            addr,
            capacity: ROWS,
        })?;
        self.counters.reads += 1;
        Ok(value)
    }

    /// CAM-mode parallel search: every row is compared against the pattern
    /// at once; the result reports exactly the matching row indices.
    pub fn search(&mut self, pattern: u8) -> MatchResult {
        self.counters.searches += 1;
        let matched_rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == pattern)
            .map(|(r, _)| r as u8)
            .collect();
        MatchResult {
            pattern,
            matched_rows,
        }
    }
}
