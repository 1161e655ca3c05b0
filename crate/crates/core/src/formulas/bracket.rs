//! The two bracket quantities every closed form is built from.
//!
//! `[n, m, l]` is the edge count of `K_{m-1} ∪ t·K_{l-1} ∪ K_r` where
//! `n = (m-1) + t(l-1) + r` and `0 ≤ r < l-1`; for `n ≤ m-1` it is `C(n, 2)`.
//! `[n, m]` is the edge count of the join `K_{⌊m/2⌋-1} + K̄_{n-⌊m/2⌋+1}`.

use serde::Serialize;

use super::{EdgeCount, FormulaError};

/// `C(n, 2)` without overflow for any `u64` argument.
pub fn choose2(n: u64) -> EdgeCount {
    let n = EdgeCount::from(n);
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// The `(t, r)` split of `n` against a leading clique on `m-1` vertices and
/// tail cliques on `l-1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BracketDecomposition {
    pub n: u64,
    pub m: u64,
    pub l: u64,
    pub t: u64,
    pub r: u64,
}

impl BracketDecomposition {
    /// Edge count of `K_{m-1} ∪ t·K_{l-1} ∪ K_r`.
    pub fn edges(&self) -> EdgeCount {
        choose2(self.m - 1) + EdgeCount::from(self.t) * choose2(self.l - 1) + choose2(self.r)
    }
}

fn check_ml(m: u64, l: u64) -> Result<(), FormulaError> {
    if l < 3 {
        return Err(FormulaError::TailTooSmall(l));
    }
    if m < l {
        return Err(FormulaError::LeadBelowTail { m, l });
    }
    Ok(())
}

pub fn decompose(n: u64, m: u64, l: u64) -> Result<BracketDecomposition, FormulaError> {
    check_ml(m, l)?;
    if n < m - 1 {
        return Err(FormulaError::BelowLeadingClique { n, m });
    }
    let rest = n - (m - 1);
    Ok(BracketDecomposition {
        n,
        m,
        l,
        t: rest / (l - 1),
        r: rest % (l - 1),
    })
}

/// `[n, m, l]`, including the small-`n` clause `C(n, 2)` for `n ≤ m - 1`.
pub fn bracket3(n: u64, m: u64, l: u64) -> Result<EdgeCount, FormulaError> {
    check_ml(m, l)?;
    if n < m {
        return Ok(choose2(n));
    }
    Ok(decompose(n, m, l)?.edges())
}

/// `[n, m]`.
pub fn bracket2(n: u64, m: u64) -> Result<EdgeCount, FormulaError> {
    if m < 4 {
        return Err(FormulaError::JoinOrderTooSmall(m));
    }
    let hubs = m / 2 - 1;
    if n < hubs {
        return Err(FormulaError::BelowJoinBudget { n, m });
    }
    Ok(choose2(hubs) + EdgeCount::from((m - 2) / 2) * EdgeCount::from(n - hubs))
}

/// Edge count of `K_{hubs} + K̄_{n-hubs}` plus `extra` edges inside the
/// independent side. This is the reconciled large-`n` construction term when
/// `hubs = s - 1`.
pub fn join_edges(n: u64, hubs: u64, extra: u64) -> EdgeCount {
    choose2(hubs) + EdgeCount::from(hubs) * EdgeCount::from(n - hubs) + EdgeCount::from(extra)
}
