//! Executable checks of the inequalities, identities and conjecture that the
//! closed forms rest on. Each check produces a [`SweepReport`].

mod consistency;
mod observations;
mod probe;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

pub use consistency::{check_bk_remark, check_corollary_equal_families, cross_check_consistency};
pub use observations::{
    check_observation, sweep_observation, sweep_observations, ObservationOutcome,
    ObservationParams, ObservationRanges,
};
pub use probe::{probe_conjecture, ProbeOptions};

use crate::formulas::FormulaError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("there is no observation {0}; expected 1 to 7")]
    UnknownObservation(u8),
    #[error("observation {index}: precondition {violated} does not hold")]
    Domain { index: u8, violated: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Outcome of one sweep. Every tuple lists values in the order of
/// `columns`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub check_id: String,
    pub ranges: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub cases: u64,
    pub counterexamples: Vec<Vec<u128>>,
    /// Number of equality cases; `equality_cases` keeps a bounded sample.
    pub equality_count: u64,
    pub equality_cases: Vec<Vec<u128>>,
    /// Findings reported without being asserted.
    pub notes: Vec<String>,
    pub pass: bool,
}

impl SweepReport {
    fn new(check_id: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            check_id: check_id.into(),
            ranges: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            cases: 0,
            counterexamples: Vec::new(),
            equality_count: 0,
            equality_cases: Vec::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    fn range(mut self, name: &str, value: impl ToString) -> Self {
        self.ranges.insert(name.to_string(), value.to_string());
        self
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self.equality_cases.sort();
        self.pass = self.counterexamples.is_empty();
        self
    }

    /// Human-readable summary, listing at most `limit` tuples per section.
    pub fn to_table(&self, limit: usize) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}: {verdict} ({} cases)", self.check_id, self.cases);
        for (k, v) in &self.ranges {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let section = |out: &mut String, title: &str, rows: &[Vec<u128>]| {
            if rows.is_empty() {
                return;
            }
            let _ = writeln!(out, "  {title}: {}", rows.len());
            let _ = writeln!(out, "    {}", self.columns.join("\t"));
            for row in rows.iter().take(limit) {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "    {}", cells.join("\t"));
            }
            if rows.len() > limit {
                let _ = writeln!(out, "    ... {} more", rows.len() - limit);
            }
        };
        section(&mut out, "counterexamples", &self.counterexamples);
        if self.equality_count > 0 {
            let _ = writeln!(out, "  equality cases: {}", self.equality_count);
        }
        section(&mut out, "equality sample", &self.equality_cases);
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        out
    }
}
