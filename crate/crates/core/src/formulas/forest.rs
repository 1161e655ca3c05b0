use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FormulaError;

/// A linear forest `P_{k_1} ∪ … ∪ P_{k_m}`, stored as its path orders
/// (vertex counts) sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PathForest {
    orders: Vec<u64>,
}

impl PathForest {
    /// Smallest admissible path order.
    pub const MIN_ORDER: u64 = 3;

    pub fn new(mut orders: Vec<u64>) -> Result<Self, FormulaError> {
        if orders.is_empty() {
            return Err(FormulaError::EmptyForest);
        }
        if let Some(&bad) = orders.iter().find(|&&k| k < Self::MIN_ORDER) {
            return Err(FormulaError::PathTooShort(bad));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { orders })
    }

    pub fn single(k: u64) -> Result<Self, FormulaError> {
        Self::new(vec![k])
    }

    /// `count` disjoint copies of `P_order`.
    pub fn copies(count: usize, order: u64) -> Result<Self, FormulaError> {
        Self::new(vec![order; count])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of paths `m`.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> u64 {
        self.orders[0]
    }

    pub fn smallest(&self) -> u64 {
        *self.orders.last().expect("forest is non-empty")
    }

    /// Total vertex count `Σ k_i`.
    pub fn total(&self) -> u64 {
        self.orders.iter().sum()
    }

    /// `Σ ⌊k_i / 2⌋`, the hub budget of the join construction.
    pub fn halves(&self) -> u64 {
        self.orders.iter().map(|k| k / 2).sum()
    }

    pub fn odd_count(&self) -> usize {
        self.orders.iter().filter(|&&k| k % 2 == 1).count()
    }

    pub fn all_odd(&self) -> bool {
        self.odd_count() == self.len()
    }

    pub fn all_even(&self) -> bool {
        self.odd_count() == 0
    }

    /// Parity constant: 1 when every order is odd.
    pub fn parity_constant(&self) -> u64 {
        u64::from(self.all_odd())
    }

    /// Prefix sums `k_1 + … + k_j` for `j = 1..m`.
    pub fn prefix_totals(&self) -> Vec<u64> {
        self.orders
            .iter()
            .scan(0, |acc, &k| {
                *acc += k;
                Some(*acc)
            })
            .collect()
    }

    /// `Some((count, order))` when all paths have the same order.
    pub fn as_copies(&self) -> Option<(usize, u64)> {
        let first = self.orders[0];
        self.orders
            .iter()
            .all(|&k| k == first)
            .then_some((self.len(), first))
    }
}

impl fmt::Display for PathForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of orders such as `5,3`.
impl FromStr for PathForest {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let orders = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<u64>()
                    .map_err(|_| FormulaError::MalformedForest(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(orders)
    }
}

impl TryFrom<Vec<u64>> for PathForest {
    type Error = FormulaError;

    fn try_from(orders: Vec<u64>) -> Result<Self, Self::Error> {
        Self::new(orders)
    }
}

impl From<PathForest> for Vec<u64> {
    fn from(forest: PathForest) -> Self {
        forest.orders
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_order() {
        let f: PathForest = "3, 5,4".parse().unwrap();
        assert_eq!(f.orders(), &[5, 4, 3]);
        assert_eq!(f.to_string(), "5,4,3");
        assert_eq!(f.total(), 12);
        assert_eq!(f.halves(), 5);
        assert_eq!(f.odd_count(), 2);
        assert_eq!(f.prefix_totals(), vec![5, 9, 12]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            PathForest::new(vec![]),
            Err(FormulaError::EmptyForest)
        ));
        assert!(matches!(
            PathForest::new(vec![4, 2]),
            Err(FormulaError::PathTooShort(2))
        ));
        assert!(matches!(
            "4,x".parse::<PathForest>(),
            Err(FormulaError::MalformedForest(_))
        ));
        assert!("".parse::<PathForest>().is_err());
    }

    #[test]
    fn parity() {
        assert_eq!(PathForest::new(vec![5, 5]).unwrap().parity_constant(), 1);
        assert_eq!(PathForest::new(vec![5, 4]).unwrap().parity_constant(), 0);
        assert_eq!(
            PathForest::new(vec![6, 6, 6]).unwrap().as_copies(),
            Some((3, 6))
        );
        assert_eq!(PathForest::new(vec![6, 4]).unwrap().as_copies(), None);
    }

    #[test]
    fn serde_roundtrip_normalizes() {
        let f: PathForest = serde_json::from_str("[3,5]").unwrap();
        assert_eq!(f.orders(), &[5, 3]);
        assert_eq!(serde_json::to_string(&f).unwrap(), "[5,3]");
        assert!(serde_json::from_str::<PathForest>("[1]").is_err());
    }
}
