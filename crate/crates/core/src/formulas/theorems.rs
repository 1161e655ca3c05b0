use serde::Serialize;

use super::bracket::{bracket2, bracket3, choose2, join_edges};
use super::value::{Formula, Ratio, Regime, Term, Theorem, TuranValue};
use super::{EdgeCount, FormulaError, PathForest};

fn require_vertices(n: u64) -> Result<(), FormulaError> {
    if n == 0 {
        return Err(FormulaError::TooFewVertices { n, min: 1 });
    }
    Ok(())
}

fn complete(n: u64, forest: Vec<u64>, c: u64) -> TuranValue {
    TuranValue::from_terms(
        n,
        forest,
        vec![(Term::Explicit(Formula::Complete), choose2(n))],
        Regime::TrivialComplete,
        c,
    )
}

/// `ex(n, P_k)`.
pub fn ex_path(n: u64, k: u64) -> Result<TuranValue, FormulaError> {
    if k < 3 {
        return Err(FormulaError::OrderTooSmall(k));
    }
    require_vertices(n)?;
    let c = k % 2;
    if n < k {
        return Ok(complete(n, vec![k], c));
    }
    Ok(TuranValue::from_terms(
        n,
        vec![k],
        vec![(Term::Bracket3 { m: k, l: k }, bracket3(n, k, k)?)],
        Regime::ExactTheorem(Theorem::Path),
        c,
    ))
}

/// `ex_con(n, P_k)`: maximum edges of a connected `P_k`-free graph.
///
/// The crossover where the join family overtakes the star-of-clique family
/// is `(5k-10)/4` for even `k` and `(5k-7)/4` for odd `k`.
pub fn ex_con_path(n: u64, k: u64) -> Result<TuranValue, FormulaError> {
    if k < 4 {
        return Err(FormulaError::OrderTooSmall(k));
    }
    if n < k {
        return Err(FormulaError::TooFewVertices { n, min: k });
    }
    let i = if k % 2 == 1 { 2 } else { 1 };
    let star = choose2(k - 2) + EdgeCount::from(n - k + 2);
    let join = bracket2(n, k)? + EdgeCount::from(i - 1);
    let mut value = TuranValue::from_terms(
        n,
        vec![k],
        vec![
            (Term::Explicit(Formula::CliqueStar { k }), star),
            (Term::Explicit(Formula::ConnectedJoin { k, i }), join),
        ],
        Regime::ExactTheorem(Theorem::ConnectedPath),
        k % 2,
    );
    let k = k as i64;
    value.crossover = Some(if k % 2 == 0 {
        Ratio {
            numer: 5 * k - 10,
            denom: 4,
        }
    } else {
        Ratio {
            numer: 5 * k - 7,
            denom: 4,
        }
    });
    Ok(value)
}

/// Explicit lower threshold on `n` above which `ex(n, k·P_l)` is known to equal
/// the join construction, for `k ≥ 2` and `l ≥ 4`. Saturates at `u128::MAX`.
pub fn equal_paths_threshold(k: u64, l: u64) -> Option<u128> {
    if k < 2 || l < 4 {
        return None;
    }
    let (k, l) = (u128::from(k), u128::from(l));
    let half = l / 2;
    // C(l, ⌊l/2⌋) by the multiplicative formula; each prefix is an integer.
    let mut binom: u128 = 1;
    for j in 0..half {
        binom = match binom.checked_mul(l - j) {
            Some(v) => v / (j + 1),
            None => return Some(u128::MAX),
        };
    }
    let bound = 2u128
        .checked_mul(k)
        .and_then(|v| v.checked_mul(l))
        .and_then(|v| v.checked_mul(l.div_ceil(2) + 1))
        .and_then(|v| v.checked_mul(binom))
        .and_then(|v| v.checked_add(2 * l));
    Some(bound.unwrap_or(u128::MAX))
}

/// The large-`n` construction `K_{s-1} + (c·K_2 ∪ K̄)` with
/// `s = Σ ⌊k_i/2⌋`, worth `C(s-1, 2) + (s-1)(n-s+1) + c` edges.
///
/// Proven only for `k·P_l` above [`equal_paths_threshold`]; everywhere else
/// the regime is [`Regime::Conjectured`].
pub fn large_n_value(forest: &PathForest, n: u64) -> Result<TuranValue, FormulaError> {
    if forest.largest() == 3 {
        return Err(FormulaError::OnlyThrees(forest.to_string()));
    }
    let s = forest.halves();
    let c = forest.parity_constant();
    if n < s + c {
        return Err(FormulaError::TooFewVertices { n, min: s + c });
    }
    let proven = forest.as_copies().is_some_and(|(k, l)| {
        equal_paths_threshold(k as u64, l).is_some_and(|bound| u128::from(n) >= bound)
    });
    let regime = if proven {
        Regime::ExactTheorem(Theorem::EqualPathsLargeN)
    } else {
        Regime::Conjectured
    };
    Ok(TuranValue::from_terms(
        n,
        forest.orders().to_vec(),
        vec![(
            Term::Explicit(Formula::LargeN { s, c }),
            join_edges(n, s - 1, c),
        )],
        regime,
        c,
    ))
}

/// `ex(n, k·P_3)` for all `n`.
pub fn ex_kp3(n: u64, k: u64) -> Result<TuranValue, FormulaError> {
    if k == 0 {
        return Err(FormulaError::TooFewPaths(1));
    }
    require_vertices(n)?;
    let forest = vec![3; k as usize];
    let c = 1;
    if n < 3 * k {
        return Ok(complete(n, forest, c));
    }
    let clique = choose2(3 * k - 1) + EdgeCount::from((n - 3 * k).div_ceil(2));
    let join = join_edges(n, k - 1, 0) + EdgeCount::from((n - k).div_ceil(2));
    Ok(TuranValue::from_terms(
        n,
        forest,
        vec![
            (Term::Explicit(Formula::CliqueMatching { k }), clique),
            (Term::Explicit(Formula::JoinMatching { k }), join),
        ],
        Regime::ExactTheorem(Theorem::MultipleThrees),
        c,
    ))
}

/// `[n, k_1+…+k_j, k_j]` for `j = 1..m`.
fn prefix_terms(n: u64, forest: &PathForest) -> Result<Vec<(Term, EdgeCount)>, FormulaError> {
    forest
        .prefix_totals()
        .into_iter()
        .zip(forest.orders())
        .map(|(m, &l)| Ok((Term::Bracket3 { m, l }, bracket3(n, m, l)?)))
        .collect()
}

/// `ex(n, F)` for a linear forest, dispatched to whichever result covers
/// `(n, F)`. Outside every proven case the conjectured value is returned with
/// [`Regime::Conjectured`].
pub fn ex_forest(n: u64, forest: &PathForest) -> Result<TuranValue, FormulaError> {
    require_vertices(n)?;
    let orders = forest.orders().to_vec();
    let c = forest.parity_constant();
    if n < forest.total() {
        return Ok(complete(n, orders, c));
    }
    if forest.len() == 1 {
        return ex_path(n, forest.largest());
    }
    if forest.odd_count() <= 1 {
        let mut terms = prefix_terms(n, forest)?;
        terms.push((
            Term::Bracket2 { m: forest.total() },
            bracket2(n, forest.total())?,
        ));
        return Ok(TuranValue::from_terms(
            n,
            orders,
            terms,
            Regime::ExactTheorem(Theorem::AtMostOneOdd),
            c,
        ));
    }
    match *forest.orders() {
        [long, 3] if long >= 5 && long % 2 == 1 => {
            let l = (long - 1) / 2;
            let terms = vec![
                (
                    Term::Bracket3 { m: long, l: long },
                    bracket3(n, long, long)?,
                ),
                (
                    Term::Bracket3 { m: long + 3, l: 3 },
                    bracket3(n, long + 3, 3)?,
                ),
                (
                    Term::Explicit(Formula::SplitJoin { l }),
                    join_edges(n, l, 1),
                ),
            ];
            return Ok(TuranValue::from_terms(
                n,
                orders,
                terms,
                Regime::ExactTheorem(Theorem::OddPathPlusThree),
                c,
            ));
        }
        [5, 5] => {
            let terms = vec![
                (Term::Bracket3 { m: 10, l: 5 }, bracket3(n, 10, 5)?),
                (
                    Term::Explicit(Formula::ThreeNMinusFive),
                    3 * EdgeCount::from(n) - 5,
                ),
            ];
            return Ok(TuranValue::from_terms(
                n,
                orders,
                terms,
                Regime::ExactTheorem(Theorem::TwoFives),
                c,
            ));
        }
        _ => {}
    }
    if forest.largest() == 3 {
        return ex_kp3(n, forest.len() as u64);
    }
    let mut value = conjecture_value(n, forest)?;
    let large_n_proven = matches!(
        large_n_value(forest, n)?.regime,
        Regime::ExactTheorem(Theorem::EqualPathsLargeN)
    );
    let large_n_wins = value
        .achieving()
        .any(|t| matches!(t.term, Term::Explicit(Formula::LargeN { .. })));
    if large_n_proven && large_n_wins {
        value.regime = Regime::ExactTheorem(Theorem::EqualPathsLargeN);
    }
    Ok(value)
}

/// Conjectured `ex(n, F)`: the prefix bracket terms together with the
/// large-`n` join construction. Requires `k_1 > 3`.
pub fn conjecture_value(n: u64, forest: &PathForest) -> Result<TuranValue, FormulaError> {
    if forest.largest() == 3 {
        return Err(FormulaError::OnlyThrees(forest.to_string()));
    }
    require_vertices(n)?;
    let c = forest.parity_constant();
    if n < forest.total() {
        return Ok(complete(n, forest.orders().to_vec(), c));
    }
    let s = forest.halves();
    let mut terms = prefix_terms(n, forest)?;
    terms.push((
        Term::Explicit(Formula::LargeN { s, c }),
        join_edges(n, s - 1, c),
    ));
    Ok(TuranValue::from_terms(
        n,
        forest.orders().to_vec(),
        terms,
        Regime::Conjectured,
        c,
    ))
}

/// `ex_con(n, F)` as far as it is determined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum ConnectedForestValue {
    Exact(TuranValue),
    /// Only an upper bound is known; the true value may be smaller.
    UpperBound(TuranValue),
    /// The parity pattern is not covered by any result.
    Unknown {
        n: u64,
        forest: Vec<u64>,
    },
}

impl ConnectedForestValue {
    pub fn value(&self) -> Option<&TuranValue> {
        match self {
            ConnectedForestValue::Exact(v) | ConnectedForestValue::UpperBound(v) => Some(v),
            ConnectedForestValue::Unknown { .. } => None,
        }
    }
}

pub fn ex_con_forest(n: u64, forest: &PathForest) -> Result<ConnectedForestValue, FormulaError> {
    if forest.len() < 2 {
        return Err(FormulaError::TooFewPaths(2));
    }
    let k = forest.total();
    if n < k {
        return Err(FormulaError::TooFewVertices { n, min: k });
    }
    let orders = forest.orders().to_vec();
    let regime = Regime::ExactTheorem(Theorem::ConnectedForest);
    let c = forest.parity_constant();
    if forest.all_even() {
        let mut value = ex_con_path(n, k)?;
        value.forest = orders;
        value.regime = regime;
        value.c = c;
        return Ok(ConnectedForestValue::Exact(value));
    }
    if forest.odd_count() == 1 {
        let star = choose2(k - 2) + EdgeCount::from(n - k + 2);
        let join = (Term::Bracket2 { m: k }, bracket2(n, k)?);
        if forest.smallest() > 3 {
            let terms = vec![(Term::Explicit(Formula::CliqueStar { k }), star), join];
            return Ok(ConnectedForestValue::Exact(TuranValue::from_terms(
                n, orders, terms, regime, c,
            )));
        }
        let terms = vec![
            (Term::Explicit(Formula::CliqueStarLessOne { k }), star - 1),
            join,
        ];
        return Ok(ConnectedForestValue::UpperBound(TuranValue::from_terms(
            n, orders, terms, regime, c,
        )));
    }
    Ok(ConnectedForestValue::Unknown { n, forest: orders })
}
