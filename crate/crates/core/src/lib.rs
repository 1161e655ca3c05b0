//! Turán numbers of linear forests.
//!
//! `pathturan-core` evaluates the closed forms for `ex(n, P_{k_1} ∪ … ∪ P_{k_m})`,
//! builds the extremal graphs they describe, and checks both against exact
//! oracles: a linear-forest containment checker and two brute-force
//! extremal searches (isomorph-free enumeration and hitting-set branch and
//! bound).
//!
//! ```
//! use pathturan_core::formulas::{ex_forest, PathForest};
//!
//! let forest: PathForest = "5,3".parse().unwrap();
//! assert_eq!(ex_forest(8, &forest).unwrap().value, 21);
//! ```

pub mod containment;
pub mod formulas;
pub mod graphs;
pub mod search;
pub mod verify;

pub use formulas::{EdgeCount, PathForest, Regime, Term, TuranValue};
pub use graphs::{ExtremalDescription, SimpleGraph};
