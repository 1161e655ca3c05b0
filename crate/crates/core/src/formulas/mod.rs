//! Closed-form Turán numbers for linear forests.
//!
//! Every value is reported as a [`TuranValue`]: the maximum over a list of
//! candidate terms, the terms that attain it, and a [`Regime`] that says
//! whether the number is proven, trivial, conjectured or unknown.

mod bracket;
mod forest;
mod theorems;
mod value;

use thiserror::Error;

pub use bracket::{bracket2, bracket3, choose2, decompose, join_edges, BracketDecomposition};
pub use forest::PathForest;
pub use theorems::{
    conjecture_value, equal_paths_threshold, ex_con_forest, ex_con_path, ex_forest, ex_kp3,
    ex_path, large_n_value, ConnectedForestValue,
};
pub use value::{Formula, Ratio, Regime, Term, TermValue, Theorem, TuranValue};

/// Edge counts are carried in 128 bits so `C(n, 2)` never overflows.
pub type EdgeCount = u128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("a linear forest needs at least one path")]
    EmptyForest,
    #[error("path order {0} is below the minimum of 3")]
    PathTooShort(u64),
    #[error("malformed forest spec {0:?}: expected comma-separated integers")]
    MalformedForest(String),
    #[error("tail clique parameter l = {0} must be at least 3")]
    TailTooSmall(u64),
    #[error("leading parameter m = {m} must be at least l = {l}")]
    LeadBelowTail { m: u64, l: u64 },
    #[error("n = {n} is below the leading clique K_{{{m}-1}}")]
    BelowLeadingClique { n: u64, m: u64 },
    #[error("join parameter m = {0} must be at least 4")]
    JoinOrderTooSmall(u64),
    #[error("n = {n} is below the join budget ⌊{m}/2⌋-1")]
    BelowJoinBudget { n: u64, m: u64 },
    #[error("path order k = {0} is below the minimum for this result")]
    OrderTooSmall(u64),
    #[error("n = {n} is below the required minimum {min}")]
    TooFewVertices { n: u64, min: u64 },
    #[error("forest must have at least {0} paths")]
    TooFewPaths(usize),
    #[error("forest {0} consists only of P_3 copies; use the k·P_3 formula")]
    OnlyThrees(String),
}
