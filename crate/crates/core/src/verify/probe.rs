use std::ops::RangeInclusive;

use super::{SweepReport, VerifyError};
use crate::containment::contains_linear_forest;
use crate::formulas::{conjecture_value, ex_forest, PathForest};
use crate::graphs::construct_all_terms;
use crate::search::{
    turan_branch_bound_with, turan_enumerate_with, OracleOptions, SearchError, ENUMERATE_LIMIT,
};

#[derive(Clone, Debug)]
pub struct ProbeOptions {
    /// Run an oracle for every `n` up to this order (0 disables it).
    pub oracle_max_n: usize,
    pub oracle: OracleOptions,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        Self {
            oracle_max_n: ENUMERATE_LIMIT,
            oracle: OracleOptions::default(),
        }
    }
}

/// Compares the conjectured value with every construction, with any proven
/// value, and (for small `n`) with an oracle. Columns: `n`, the conjectured
/// value, the competing value, and a code for what disagreed (1: a
/// construction contains F or has the wrong size, 2: a proven value, 3: the
/// oracle).
pub fn probe_conjecture(
    forest: &PathForest,
    n: RangeInclusive<u64>,
    opts: &ProbeOptions,
) -> Result<SweepReport, VerifyError> {
    let mut report = SweepReport::new(
        format!("conjecture-probe-{forest}"),
        &["n", "conjectured", "other", "source"],
    )
    .range("n", format!("{}..={}", n.start(), n.end()))
    .range("oracle max n", opts.oracle_max_n);
    for n in n {
        if n == 0 {
            continue;
        }
        report.cases += 1;
        let conj = conjecture_value(n, forest)?;
        for c in construct_all_terms(&conj) {
            let e = c.graph.edge_count() as u128;
            let term_value = conj
                .terms
                .iter()
                .find(|t| t.term == c.term)
                .map(|t| t.value);
            if contains_linear_forest(&c.graph, forest).is_some()
                || Some(e) != term_value
                || e > conj.value
            {
                report
                    .counterexamples
                    .push(vec![n.into(), conj.value, e, 1]);
            }
        }
        let proven = ex_forest(n, forest)?;
        if proven.regime.is_exact() && proven.value != conj.value {
            report
                .counterexamples
                .push(vec![n.into(), conj.value, proven.value, 2]);
        }
        if n as usize > opts.oracle_max_n {
            continue;
        }
        let oracle = if n as usize <= ENUMERATE_LIMIT {
            turan_enumerate_with(n as usize, forest, false, &opts.oracle)
        } else {
            turan_branch_bound_with(n as usize, forest, &opts.oracle)
        };
        match oracle {
            Ok(r) if r.max_edges as u128 == conj.value => {
                report
                    .notes
                    .push(format!("n = {n}: oracle agrees ({})", r.max_edges));
            }
            Ok(r) => {
                report
                    .counterexamples
                    .push(vec![n.into(), conj.value, r.max_edges as u128, 3])
            }
            Err(SearchError::Budget(p)) => report.notes.push(format!(
                "n = {n}: oracle budget exhausted, best found {:?}, conjectured {}",
                p.best, conj.value
            )),
            Err(SearchError::Capacity { .. }) => {}
            Err(SearchError::Formula(e)) => return Err(e.into()),
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_total_is_trivial() {
        let f: PathForest = "5,5,3".parse().unwrap();
        let opts = ProbeOptions {
            oracle_max_n: 0,
            ..ProbeOptions::default()
        };
        let r = probe_conjecture(&f, 11..=11, &opts).unwrap();
        assert!(r.pass, "{}", r.to_table(5));
    }

    #[test]
    fn proven_case_matches_oracle() {
        let f: PathForest = "5,3".parse().unwrap();
        let r = probe_conjecture(&f, 8..=9, &ProbeOptions::default()).unwrap();
        assert!(r.pass, "{}", r.to_table(5));
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn larger_range_constructions_are_sound() {
        let f: PathForest = "5,5,3".parse().unwrap();
        let opts = ProbeOptions {
            oracle_max_n: 0,
            ..ProbeOptions::default()
        };
        let r = probe_conjecture(&f, 13..=40, &opts).unwrap();
        assert!(r.pass, "{}", r.to_table(5));
    }
}
