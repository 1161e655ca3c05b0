//! The seven bracket inequalities used to combine components.
//!
//! All of them assume orders `k1 ≥ k2 ≥ km ≥ 3` with at most one odd. The
//! first uses a single order `n` (passed as `n1`, with `n2 = 0`).

use rayon::prelude::*;
use serde::Serialize;

use super::{SweepReport, VerifyError};
use crate::formulas::{bracket2, bracket3, choose2, EdgeCount};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObservationParams {
    pub k1: u64,
    pub k2: u64,
    pub km: u64,
    pub n1: u64,
    pub n2: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObservationOutcome {
    pub index: u8,
    pub lhs: EdgeCount,
    pub rhs: EdgeCount,
    /// Whether the inequality is strict in the statement.
    pub strict: bool,
    pub holds: bool,
    pub equality: bool,
    /// Observation 2 only: `(r1, r2)` in `n1 = k1 + t1(km-1) + r1`,
    /// `n2 = t2(km-1) + r2`.
    pub remainders: Option<(u64, u64)>,
}

fn domain(index: u8, p: &ObservationParams) -> Result<(), VerifyError> {
    let fail = |violated: &str| {
        Err(VerifyError::Domain {
            index,
            violated: violated.to_string(),
        })
    };
    if !(1..=7).contains(&index) {
        return Err(VerifyError::UnknownObservation(index));
    }
    if !(p.k1 >= p.k2 && p.k2 >= p.km && p.km >= 3) {
        return fail("k1 ≥ k2 ≥ km ≥ 3");
    }
    if [p.k1, p.k2, p.km].iter().filter(|k| *k % 2 == 1).count() > 1 {
        return fail("at most one of k1, k2, km odd");
    }
    let ObservationParams { k1, k2, km, n1, n2 } = *p;
    match index {
        1 if n1 < k1 + km => fail("n ≥ k1 + km"),
        1 if n2 != 0 => fail("n2 = 0 (single order)"),
        2 if n1 < k1 => fail("n1 ≥ k1"),
        3 if n1 < k1 || n2 < k2 => fail("n1 ≥ k1 and n2 ≥ k2"),
        4 if n1 < k1 + km || n2 < k2 + km => fail("n1 ≥ k1 + km and n2 ≥ k2 + km"),
        5 if n1 < k1 + km => fail("n1 ≥ k1 + km"),
        5 if n2 == 0 => fail("n2 ≥ 1"),
        6 | 7 if !((n1 >= k1 + km && n2 >= k2) || (n1 >= k1 && n2 >= k2 + km)) => {
            fail("n1 ≥ k1 + km and n2 ≥ k2, or n1 ≥ k1 and n2 ≥ k2 + km")
        }
        _ => Ok(()),
    }
}

/// Evaluates both sides of observation `index`.
pub fn check_observation(
    index: u8,
    p: &ObservationParams,
) -> Result<ObservationOutcome, VerifyError> {
    domain(index, p)?;
    let ObservationParams { k1, k2, km, n1, n2 } = *p;
    let n = n1 + n2;
    let (lhs, rhs, strict) = match index {
        1 => (
            (choose2(k1 + km - 2) + EdgeCount::from(n1 + 2) - EdgeCount::from(k1 + km))
                .max(bracket2(n1, k1 + km)?),
            bracket3(n1, k1 + km, km)?.max(bracket2(n1, k1 + km)?),
            false,
        ),
        2 => (
            bracket3(n1, k1 + km, km)? + bracket3(n2, km, km)?,
            bracket3(n, k1 + km, km)?,
            false,
        ),
        3 => (
            bracket3(n1, k1 + km, km)? + bracket3(n2, k2 + km, km)?,
            bracket3(n, k1 + k2 + km, km)?,
            true,
        ),
        4 => (
            bracket2(n1, k1 + km)? + bracket2(n2, k2 + km)?,
            bracket2(n, k1 + k2 + km)?,
            true,
        ),
        5 => (
            bracket2(n1, k1 + km)? + bracket3(n2, km, km)?,
            bracket2(n, k1 + km)?,
            true,
        ),
        6 => (
            bracket2(n1, k1 + km)? + bracket3(n2, k2 + km, km)?,
            bracket2(n, k1 + k2 + km)?,
            true,
        ),
        _ => (
            bracket3(n1, k1 + km, km)? + bracket2(n2, k2 + km)?,
            bracket3(n, k1 + k2 + km, km)?.max(bracket2(n, k1 + k2 + km)?),
            true,
        ),
    };
    let remainders = (index == 2).then(|| ((n1 - k1) % (km - 1), n2 % (km - 1)));
    Ok(ObservationOutcome {
        index,
        lhs,
        rhs,
        strict,
        holds: if strict { lhs < rhs } else { lhs <= rhs },
        equality: lhs == rhs,
        remainders,
    })
}

/// Equality cases kept per order triple; all of them are counted.
const EQUALITY_SAMPLE_PER_TRIPLE: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct ObservationRanges {
    pub even_orders: Vec<u64>,
    /// Odd orders; each triple uses at most one of them.
    pub odd_orders: Vec<u64>,
    pub n_max: u64,
}

impl Default for ObservationRanges {
    fn default() -> Self {
        Self {
            even_orders: vec![4, 6, 8, 10],
            odd_orders: vec![3, 5, 7, 9],
            n_max: 300,
        }
    }
}

impl ObservationRanges {
    /// All `(k1, k2, km)` with `k1 ≥ k2 ≥ km` and at most one odd entry.
    pub fn triples(&self) -> Vec<(u64, u64, u64)> {
        let mut orders: Vec<u64> = self
            .even_orders
            .iter()
            .chain(&self.odd_orders)
            .copied()
            .collect();
        orders.sort_unstable();
        orders.dedup();
        let mut out = Vec::new();
        for &k1 in &orders {
            for &k2 in orders.iter().filter(|&&k| k <= k1) {
                for &km in orders.iter().filter(|&&k| k <= k2) {
                    if [k1, k2, km].iter().filter(|k| *k % 2 == 1).count() <= 1 {
                        out.push((k1, k2, km));
                    }
                }
            }
        }
        out
    }
}

/// Checks observation `index` on every in-domain tuple of `ranges`.
pub fn sweep_observation(
    index: u8,
    ranges: &ObservationRanges,
) -> Result<SweepReport, VerifyError> {
    if !(1..=7).contains(&index) {
        return Err(VerifyError::UnknownObservation(index));
    }
    let columns: &[&str] = if index == 2 {
        &["k1", "k2", "km", "n1", "n2", "lhs", "rhs", "r1", "r2"]
    } else {
        &["k1", "k2", "km", "n1", "n2", "lhs", "rhs"]
    };
    let mut report = SweepReport::new(format!("observation-{index}"), columns)
        .range("even orders", format!("{:?}", ranges.even_orders))
        .range("odd orders", format!("{:?}", ranges.odd_orders))
        .range("n max", ranges.n_max);
    let n2_max = if index == 1 { 0 } else { ranges.n_max };

    // (cases, counterexamples, equality count, equality sample) per triple
    type Tally = (u64, Vec<Vec<u128>>, u64, Vec<Vec<u128>>);
    let per_triple: Vec<Tally> = ranges
        .triples()
        .into_par_iter()
        .map(|(k1, k2, km)| {
            let (mut cases, mut bad, mut equal_count, mut equal) = (0, Vec::new(), 0, Vec::new());
            for n1 in 0..=ranges.n_max {
                for n2 in 0..=n2_max {
                    let p = ObservationParams { k1, k2, km, n1, n2 };
                    let Ok(o) = check_observation(index, &p) else {
                        continue;
                    };
                    cases += 1;
                    let mut row: Vec<u128> = [k1, k2, km, n1, n2]
                        .iter()
                        .map(|&v| u128::from(v))
                        .collect();
                    row.extend([o.lhs, o.rhs]);
                    if let Some((r1, r2)) = o.remainders {
                        row.extend([u128::from(r1), u128::from(r2)]);
                    }
                    // Observation 2 claims equality only with r1 = 0 or r2 = 0.
                    let bad_equality =
                        o.equality && o.remainders.is_some_and(|(r1, r2)| r1 != 0 && r2 != 0);
                    if !o.holds || bad_equality {
                        bad.push(row);
                    } else if o.equality && index == 2 {
                        equal_count += 1;
                        if equal.len() < EQUALITY_SAMPLE_PER_TRIPLE {
                            equal.push(row);
                        }
                    }
                }
            }
            (cases, bad, equal_count, equal)
        })
        .collect();
    for (cases, bad, equal_count, equal) in per_triple {
        report.cases += cases;
        report.counterexamples.extend(bad);
        report.equality_count += equal_count;
        report.equality_cases.extend(equal);
    }
    Ok(report.finish())
}

pub fn sweep_observations(ranges: &ObservationRanges) -> Vec<SweepReport> {
    (1..=7)
        .map(|i| sweep_observation(i, ranges).expect("index in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k1: u64, k2: u64, km: u64, n1: u64, n2: u64) -> ObservationParams {
        ObservationParams { k1, k2, km, n1, n2 }
    }

    #[test]
    fn observation_two_examples() {
        let o = check_observation(2, &p(4, 4, 4, 7, 3)).unwrap();
        assert_eq!((o.lhs, o.rhs), (24, 24));
        assert!(o.equality);
        assert_eq!(o.remainders, Some((0, 0)));

        let o = check_observation(2, &p(4, 4, 4, 8, 2)).unwrap();
        assert_eq!((o.lhs, o.rhs), (22, 24));
        assert!(o.holds && !o.equality);
        assert_eq!(o.remainders, Some((1, 2)));
    }

    #[test]
    fn observation_one_example() {
        let o = check_observation(1, &p(6, 4, 4, 10, 0)).unwrap();
        // C(8,2) + (10 - 6 - 4 + 2) = 30 = [10,10]; [10,10,4] = C(9,2).
        assert_eq!((o.lhs, o.rhs), (28 + 2, 36));
        assert!(o.holds);
    }

    #[test]
    fn domain_errors_name_the_precondition() {
        let err = check_observation(3, &p(5, 4, 3, 10, 10)).unwrap_err();
        assert!(err.to_string().contains("at most one"), "{err}");
        let err = check_observation(4, &p(6, 4, 4, 9, 20)).unwrap_err();
        assert!(err.to_string().contains("n1 ≥ k1 + km"), "{err}");
        assert!(matches!(
            check_observation(8, &p(4, 4, 4, 8, 8)),
            Err(VerifyError::UnknownObservation(8))
        ));
        assert!(check_observation(5, &p(4, 4, 4, 8, 0)).is_err());
    }

    #[test]
    fn empty_ranges_pass_vacuously() {
        let r = ObservationRanges {
            even_orders: vec![],
            odd_orders: vec![],
            n_max: 50,
        };
        for rep in sweep_observations(&r) {
            assert!(rep.pass);
            assert_eq!(rep.cases, 0);
        }
    }

    #[test]
    fn small_sweep_passes() {
        let r = ObservationRanges {
            n_max: 40,
            ..ObservationRanges::default()
        };
        for rep in sweep_observations(&r) {
            assert!(rep.pass, "{}", rep.to_table(5));
            assert!(rep.cases > 0);
        }
    }
}
