use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{SweepReport, VerifyError};
use crate::formulas::{bracket2, bracket3, choose2, ex_forest, PathForest, Term};

/// `ex(n, P_6k ∪ P_6k ∪ P_4k) = ex(n, P_8k ∪ P_4k ∪ P_4k)` for `n ≤ n_max`,
/// both equal to `max{[n,16k,4k], [n,16k]}` once `n ≥ 16k`, and both
/// attained only by those two terms.
pub fn check_corollary_equal_families(k: u64, n_max: u64) -> Result<SweepReport, VerifyError> {
    if k == 0 {
        return Err(VerifyError::Precondition("k ≥ 1".into()));
    }
    let f = PathForest::new(vec![6 * k, 6 * k, 4 * k])?;
    let g = PathForest::new(vec![8 * k, 4 * k, 4 * k])?;
    let mut report = SweepReport::new(
        format!("corollary-equal-families-k{k}"),
        &["k", "n", "ex_first", "ex_second", "pivot"],
    )
    .range("n", format!("1..={n_max}"));
    let allowed = [
        Term::Bracket3 {
            m: 16 * k,
            l: 4 * k,
        },
        Term::Bracket2 { m: 16 * k },
    ];
    for n in 1..=n_max {
        report.cases += 1;
        let a = ex_forest(n, &f)?;
        let b = ex_forest(n, &g)?;
        let pivot = if n >= 16 * k {
            bracket3(n, 16 * k, 4 * k)?.max(bracket2(n, 16 * k)?)
        } else {
            choose2(n)
        };
        let terms_ok = n < 16 * k
            || [&a, &b]
                .iter()
                .all(|v| v.achieving_terms().iter().all(|t| allowed.contains(t)));
        if a.value != b.value || a.value != pivot || !terms_ok {
            report.counterexamples.push(vec![
                u128::from(k),
                u128::from(n),
                a.value,
                b.value,
                pivot,
            ]);
        }
    }
    Ok(report.finish())
}

/// `[n, kl] ≥ [n, kl, l]` for `n ≥ ⌈5kl/4⌉`. Values of `n` below the
/// threshold are counted in a note when the inequality fails there.
pub fn check_bk_remark(k: u64, l: u64, n: RangeInclusive<u64>) -> Result<SweepReport, VerifyError> {
    if !l.is_multiple_of(2) || l < 4 {
        return Err(VerifyError::Precondition("l even and at least 4".into()));
    }
    if k < 2 {
        return Err(VerifyError::Precondition("k ≥ 2".into()));
    }
    let threshold = (5 * k * l).div_ceil(4);
    let mut report = SweepReport::new(
        format!("bk-remark-k{k}-l{l}"),
        &["k", "l", "n", "join", "cliques"],
    )
    .range("n", format!("{}..={}", n.start(), n.end()))
    .range("threshold", threshold);
    let mut below = 0;
    for n in n {
        if n < k * l / 2 - 1 {
            continue;
        }
        let join = bracket2(n, k * l)?;
        let cliques = bracket3(n, k * l, l)?;
        if n < threshold {
            below += u64::from(join < cliques);
            continue;
        }
        report.cases += 1;
        if join < cliques {
            report
                .counterexamples
                .push(vec![k.into(), l.into(), n.into(), join, cliques]);
        }
    }
    if below > 0 {
        report.notes.push(format!(
            "{below} values below the threshold fail the inequality (outside the remark's range)"
        ));
    }
    Ok(report.finish())
}

/// Formula-level identities between results that overlap, for `n ≤ n_max`.
pub fn cross_check_consistency(n_max: u64) -> SweepReport {
    let mut report = SweepReport::new("consistency", &["case", "a", "b", "n", "left", "right"])
        .range("n max", n_max);
    let rows: Vec<(u64, Vec<Vec<u128>>)> = [odd_plus_three, two_paths, equal_orders]
        .par_iter()
        .map(|check| check(n_max))
        .collect();
    for (cases, bad) in rows {
        report.cases += cases;
        report.counterexamples.extend(bad);
    }
    report
        .notes
        .push("case 1: P_5 ∪ P_3; case 2: two paths; case 3: equal orders k·P_l".into());
    report.finish()
}

fn row(case: u128, a: u64, b: u64, n: u64, left: u128, right: u128) -> Vec<u128> {
    vec![case, a.into(), b.into(), n.into(), left, right]
}

/// The general odd-plus-three value at `2l+1 = 5` against
/// `max{21 + ⌊(n-7)/2⌋, 2(n-1)}`.
fn odd_plus_three(n_max: u64) -> (u64, Vec<Vec<u128>>) {
    let f = PathForest::new(vec![5, 3]).expect("valid");
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 8..=n_max {
        cases += 1;
        let left = ex_forest(n, &f).expect("in domain").value;
        let right = u128::from(21 + (n - 7) / 2).max(u128::from(2 * (n - 1)));
        if left != right {
            bad.push(row(1, 5, 3, n, left, right));
        }
    }
    (cases, bad)
}

/// Two paths with at most one odd order against
/// `max{[n,k1,k1], [n,k1+k2,k2], [n,k1+k2]}`.
fn two_paths(n_max: u64) -> (u64, Vec<Vec<u128>>) {
    let mut bad = Vec::new();
    let mut cases = 0;
    for k1 in 4..=12u64 {
        for k2 in 3..=k1 {
            if k1 % 2 == 1 && k2 % 2 == 1 {
                continue;
            }
            let f = PathForest::new(vec![k1, k2]).expect("valid");
            for n in (k1 + k2)..=n_max {
                cases += 1;
                let left = ex_forest(n, &f).expect("in domain").value;
                let right = bracket3(n, k1, k1)
                    .and_then(|a| Ok(a.max(bracket3(n, k1 + k2, k2)?)))
                    .and_then(|a| Ok(a.max(bracket2(n, k1 + k2)?)))
                    .expect("in domain");
                if left != right {
                    bad.push(row(2, k1, k2, n, left, right));
                }
            }
        }
    }
    (cases, bad)
}

/// For `k·P_l` with `l` even: the prefix terms `[n, jl, l]` increase with `j`
/// and the value is `max{[n, kl, l], [n, kl]}`.
fn equal_orders(n_max: u64) -> (u64, Vec<Vec<u128>>) {
    let mut bad = Vec::new();
    let mut cases = 0;
    for k in 2..=5u64 {
        for l in [4u64, 6, 8, 10] {
            let f = PathForest::copies(k as usize, l).expect("valid");
            for n in (k * l)..=n_max {
                cases += 1;
                let chain: Vec<u128> = (1..=k)
                    .map(|j| bracket3(n, j * l, l).expect("in domain"))
                    .collect();
                if let Some(j) = chain.windows(2).position(|w| w[0] >= w[1]) {
                    bad.push(row(3, k, l, n, chain[j], chain[j + 1]));
                }
                let left = ex_forest(n, &f).expect("in domain").value;
                let right = chain[k as usize - 1].max(bracket2(n, k * l).expect("in domain"));
                if left != right {
                    bad.push(row(3, k, l, n, left, right));
                }
            }
        }
    }
    (cases, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_small_k() {
        for k in 1..=2 {
            let r = check_corollary_equal_families(k, 200).unwrap();
            assert!(r.pass, "{}", r.to_table(5));
        }
    }

    #[test]
    fn bk_examples() {
        assert!(check_bk_remark(2, 4, 10..=40).unwrap().pass);
        let r = check_bk_remark(3, 6, 23..=23).unwrap();
        assert!(r.pass);
        assert_eq!(r.cases, 1);
        assert!(check_bk_remark(2, 5, 10..=40).is_err());
        assert!(check_bk_remark(1, 4, 10..=40).is_err());
    }

    #[test]
    fn bk_remark_fails_at_its_threshold_for_two_p6() {
        // n = 15 = ⌈5·12/4⌉: the clique family K_11 ∪ K_4 has 61 edges and
        // no 2·P_6, while the join has 60.
        let r = check_bk_remark(2, 6, 15..=15).unwrap();
        assert!(!r.pass);
        assert_eq!(r.counterexamples, vec![vec![2, 6, 15, 60, 61]]);
        let g = crate::SimpleGraph::complete(11).disjoint_union(&crate::SimpleGraph::complete(4));
        assert_eq!(g.edge_count(), 61);
        let f = crate::PathForest::copies(2, 6).unwrap();
        assert!(crate::containment::contains_linear_forest(&g, &f).is_none());
    }

    #[test]
    fn consistency_passes() {
        let r = cross_check_consistency(120);
        assert!(r.pass, "{}", r.to_table(10));
    }
}
