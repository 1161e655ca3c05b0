use std::fmt;

use serde::Serialize;

use super::EdgeCount;

/// Closed-form terms that are not a bare bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "formula", rename_all = "kebab-case")]
pub enum Formula {
    /// `C(n, 2)`.
    Complete,
    /// `C(k-2, 2) + (n - k + 2)`: `(K_{k-3} ∪ K̄_{n-k+2}) + K_1`.
    CliqueStar { k: u64 },
    /// `C(k-2, 2) + (n - k + 2) - 1`.
    CliqueStarLessOne { k: u64 },
    /// `[n, k] + i - 1`: `(K_i ∪ K̄_{n-⌊(k+1)/2⌋}) + K_{⌊k/2⌋-1}`.
    ConnectedJoin { k: u64, i: u64 },
    /// `C(3k-1, 2) + ⌊(n-3k+1)/2⌋`: `K_{3k-1} ∪ M_{n-3k+1}`.
    CliqueMatching { k: u64 },
    /// `C(k-1, 2) + (k-1)(n-k+1) + ⌊(n-k+1)/2⌋`: `K_{k-1} + M_{n-k+1}`.
    JoinMatching { k: u64 },
    /// `C(l, 2) + l(n-l) + 1`: `K_l + (K_2 ∪ K̄_{n-l-2})`.
    SplitJoin { l: u64 },
    /// `3n - 5`: `K_3 + (K_2 ∪ K̄_{n-5})`.
    ThreeNMinusFive,
    /// `C(s-1, 2) + (s-1)(n-s+1) + c`: `K_{s-1} + (c·K_2 ∪ K̄)`.
    LargeN { s: u64, c: u64 },
}

/// One candidate in a max-of-terms closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Term {
    /// `[n, m, l]`.
    Bracket3 {
        m: u64,
        l: u64,
    },
    /// `[n, m]`.
    Bracket2 {
        m: u64,
    },
    Explicit(Formula),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Bracket3 { m, l } => write!(f, "Bracket3({m},{l})"),
            Term::Bracket2 { m } => write!(f, "Bracket2({m})"),
            Term::Explicit(formula) => match formula {
                Formula::Complete => f.write_str("Complete"),
                Formula::CliqueStar { k } => write!(f, "CliqueStar({k})"),
                Formula::CliqueStarLessOne { k } => write!(f, "CliqueStarLessOne({k})"),
                Formula::ConnectedJoin { k, i } => write!(f, "ConnectedJoin({k},{i})"),
                Formula::CliqueMatching { k } => write!(f, "CliqueMatching({k})"),
                Formula::JoinMatching { k } => write!(f, "JoinMatching({k})"),
                Formula::SplitJoin { l } => write!(f, "SplitJoin({l})"),
                Formula::ThreeNMinusFive => f.write_str("ThreeNMinusFive"),
                Formula::LargeN { s, c } => write!(f, "LargeN({s},{c})"),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TermValue {
    pub term: Term,
    pub value: EdgeCount,
    pub achieving: bool,
}

/// Proven results a value can rest on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `ex(n, P_k) = [n, k, k]`.
    Path,
    /// `ex_con(n, P_k)`.
    ConnectedPath,
    /// Linear forests with at most one odd order.
    AtMostOneOdd,
    /// `P_{2l+1} ∪ P_3`.
    OddPathPlusThree,
    /// `P_5 ∪ P_5`.
    TwoFives,
    /// `k·P_3`.
    MultipleThrees,
    /// Connected hosts for a linear forest.
    ConnectedForest,
    /// `k·P_l` above its explicit large-`n` threshold.
    EqualPathsLargeN,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem::Path => "path",
            Theorem::ConnectedPath => "connected-path",
            Theorem::AtMostOneOdd => "at-most-one-odd",
            Theorem::OddPathPlusThree => "odd-path-plus-three",
            Theorem::TwoFives => "two-fives",
            Theorem::MultipleThrees => "multiple-threes",
            Theorem::ConnectedForest => "connected-forest",
            Theorem::EqualPathsLargeN => "equal-paths-large-n",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "regime", content = "theorem", rename_all = "kebab-case")]
pub enum Regime {
    ExactTheorem(Theorem),
    /// `n` is below the forest's vertex count, so `K_n` is extremal.
    TrivialComplete,
    Conjectured,
    Unknown,
}

impl Regime {
    pub fn is_exact(&self) -> bool {
        matches!(self, Regime::ExactTheorem(_) | Regime::TrivialComplete)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::ExactTheorem(t) => write!(f, "exact-theorem({t})"),
            Regime::TrivialComplete => f.write_str("trivial-complete"),
            Regime::Conjectured => f.write_str("conjectured"),
            Regime::Unknown => f.write_str("unknown"),
        }
    }
}

/// A rational `numer / denom`, used for crossover thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub numer: i64,
    pub denom: i64,
}

impl Ratio {
    pub fn as_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// A Turán number (or candidate) with the terms it was maximized over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuranValue {
    pub n: u64,
    pub forest: Vec<u64>,
    pub value: EdgeCount,
    pub terms: Vec<TermValue>,
    #[serde(flatten)]
    pub regime: Regime,
    /// 1 when every path order is odd, else 0.
    pub c: u64,
    /// Crossover between the two connected extremal families (connected
    /// path values only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossover: Option<Ratio>,
}

impl TuranValue {
    /// Builds a value as the max over `terms`, flagging every term attaining it.
    ///
    /// Panics if `terms` is empty.
    pub fn from_terms(
        n: u64,
        forest: Vec<u64>,
        terms: Vec<(Term, EdgeCount)>,
        regime: Regime,
        c: u64,
    ) -> Self {
        let value = terms
            .iter()
            .map(|&(_, v)| v)
            .max()
            .expect("at least one term");
        let terms = terms
            .into_iter()
            .map(|(term, v)| TermValue {
                term,
                value: v,
                achieving: v == value,
            })
            .collect();
        Self {
            n,
            forest,
            value,
            terms,
            regime,
            c,
            crossover: None,
        }
    }

    pub fn achieving(&self) -> impl Iterator<Item = &TermValue> {
        self.terms.iter().filter(|t| t.achieving)
    }

    pub fn achieving_terms(&self) -> Vec<Term> {
        self.achieving().map(|t| t.term).collect()
    }
}
