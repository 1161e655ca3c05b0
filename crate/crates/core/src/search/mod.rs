//! Brute-force Turán oracles.
//!
//! Two exact searches for `ex(n, F)` that never consult the formulas:
//!
//! * [`turan_enumerate`] generates every F-free graph on `n` vertices up to
//!   isomorphism by vertex augmentation, keeping one representative per
//!   canonical form at each level. A graph on `j + 1` vertices minus its
//!   last vertex is an F-free graph on `j` vertices, so extending every
//!   representative by every neighbourhood reaches every isomorphism class.
//! * [`turan_branch_bound`] starts from `K_n` and, while the current graph
//!   contains F, branches on deleting each edge of one embedded copy. Every
//!   F-free subgraph of the current graph misses at least one edge of that
//!   copy, so the branching is complete; a graph with `e` edges that still
//!   contains F can only lead to F-free graphs with at most `e - 1` edges,
//!   which is the bound used for pruning.

mod branch;
mod enumerate;

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

pub use branch::{turan_branch_bound, turan_branch_bound_with};
pub use enumerate::{turan_enumerate, turan_enumerate_with};

use crate::formulas::FormulaError;
use crate::graphs::{encode_graph6, SimpleGraph};

/// Default largest `n` for enumeration.
pub const ENUMERATE_LIMIT: usize = 9;
/// Default largest `n` for branch and bound.
pub const BRANCH_BOUND_LIMIT: usize = 12;
/// Default wall-clock budget per oracle call.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(600);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    Enumerate,
    BranchBound,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct OracleStats {
    /// Candidate graphs examined (augmentations or search nodes).
    pub nodes: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub n: usize,
    pub forest: Vec<u64>,
    pub max_edges: usize,
    /// All extremal graphs up to isomorphism when enumerating; at least one
    /// under branch and bound.
    #[serde(serialize_with = "as_graph6")]
    pub witnesses: Vec<SimpleGraph>,
    pub mode: OracleMode,
    pub connected_only: bool,
    pub stats: OracleStats,
}

fn as_graph6<S: serde::Serializer>(gs: &[SimpleGraph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(encode_graph6))
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub budget: Duration,
    /// Overrides the default size limit of the chosen mode.
    pub max_order: Option<usize>,
    /// Branch and bound only: start from the best F-free construction.
    pub seeded: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            max_order: None,
            seeded: true,
        }
    }
}

/// Best bound reached before a budget ran out.
#[derive(Clone, Debug, Serialize)]
pub struct PartialResult {
    /// Largest F-free edge count found; `None` if nothing was found yet.
    pub best: Option<usize>,
    #[serde(serialize_with = "as_graph6")]
    pub witnesses: Vec<SimpleGraph>,
    pub stats: OracleStats,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the oracle limit {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("time budget exhausted; partial result: best = {:?}", .0.best)]
    Budget(Box<PartialResult>),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::{contains_forest_naive, contains_linear_forest};
    use crate::formulas::PathForest;
    use crate::graphs::{canonical_form, construct_path_extremal};

    fn forest(s: &str) -> PathForest {
        s.parse().unwrap()
    }

    fn forms(gs: &[SimpleGraph]) -> Vec<crate::graphs::CanonicalForm> {
        let mut v: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn enumerate_examples() {
        let r = turan_enumerate(8, &forest("5,3"), false).unwrap();
        assert_eq!(r.max_edges, 21);
        let k7k1 = SimpleGraph::complete(7).disjoint_union(&SimpleGraph::empty(1));
        assert_eq!(forms(&r.witnesses), forms(&[k7k1]));

        let r = turan_enumerate(6, &forest("4"), false).unwrap();
        assert_eq!(r.max_edges, 6);
        let two_k3 = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::complete(3));
        assert_eq!(forms(&r.witnesses), forms(&[two_k3]));

        let r = turan_enumerate(7, &forest("4"), false).unwrap();
        assert_eq!(r.max_edges, 6);
        assert_eq!(forms(&r.witnesses), forms(&construct_path_extremal(7, 4)));
        assert_eq!(r.witnesses.len(), 3);

        let r = turan_enumerate(6, &forest("3,3"), false).unwrap();
        assert_eq!(r.max_edges, 10);
        let k5k1 = SimpleGraph::complete(5).disjoint_union(&SimpleGraph::empty(1));
        assert_eq!(forms(&r.witnesses), forms(&[k5k1]));
    }

    #[test]
    fn witnesses_are_free_and_extremal() {
        for (n, f, conn) in [(7, "4", true), (8, "4,3", false), (7, "3,3", false)] {
            let f = forest(f);
            let r = turan_enumerate(n, &f, conn).unwrap();
            assert!(!r.witnesses.is_empty());
            for g in &r.witnesses {
                assert_eq!(g.edge_count(), r.max_edges);
                assert!(contains_linear_forest(g, &f).is_none());
                assert!(!contains_forest_naive(g, &f).unwrap());
                assert!(!conn || g.is_connected());
            }
        }
    }

    #[test]
    fn small_n_is_complete() {
        let r = turan_enumerate(4, &forest("5"), false).unwrap();
        assert_eq!(r.max_edges, 6);
        assert_eq!(r.witnesses.len(), 1);
        let r = turan_enumerate(0, &forest("3"), false).unwrap();
        assert_eq!(r.max_edges, 0);
    }

    #[test]
    fn branch_bound_examples() {
        let r = turan_branch_bound(10, &forest("5,5")).unwrap();
        assert_eq!(r.max_edges, 36);
        let r = turan_branch_bound(10, &forest("7,3")).unwrap();
        assert_eq!(r.max_edges, 36);
        for g in &r.witnesses {
            assert!(contains_linear_forest(g, &forest("7,3")).is_none());
        }
    }

    #[test]
    fn modes_agree() {
        let unseeded = OracleOptions {
            seeded: false,
            ..OracleOptions::default()
        };
        for (n, f) in [
            (6, "4"),
            (7, "5"),
            (8, "5,3"),
            (7, "3,3"),
            (8, "4,4"),
            (7, "4,3"),
        ] {
            let f = forest(f);
            let e = turan_enumerate(n, &f, false).unwrap().max_edges;
            assert_eq!(turan_branch_bound(n, &f).unwrap().max_edges, e, "{n} {f}");
            assert_eq!(
                turan_branch_bound_with(n, &f, &unseeded).unwrap().max_edges,
                e,
                "{n} {f} unseeded"
            );
        }
    }

    #[test]
    fn limits_and_budget() {
        assert!(matches!(
            turan_enumerate(10, &forest("3"), false),
            Err(SearchError::Capacity { n: 10, limit: 9 })
        ));
        assert!(matches!(
            turan_branch_bound(13, &forest("3")),
            Err(SearchError::Capacity { n: 13, limit: 12 })
        ));
        let tight = OracleOptions {
            budget: Duration::ZERO,
            seeded: true,
            max_order: None,
        };
        match turan_branch_bound_with(12, &forest("4"), &tight) {
            Err(SearchError::Budget(p)) => assert_eq!(p.best, Some(12)),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
