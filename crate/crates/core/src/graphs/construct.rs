//! Extremal graphs for every term the formulas module can report.

use serde::Serialize;

use super::recipe::{path_extremal_recipes, ExtremalDescription};
use super::SimpleGraph;
use crate::formulas::{
    ex_con_path, ex_forest, Formula, FormulaError, PathForest, Term, TuranValue,
};

use ExtremalDescription::*;

/// One extremal graph together with the term it realizes.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub term: Term,
    pub recipe: ExtremalDescription,
    pub graph: SimpleGraph,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionSet {
    pub value: TuranValue,
    /// False when the value is only conjectured; the graphs are then
    /// candidates, not certified extremal graphs.
    pub certified: bool,
    pub constructions: Vec<Construction>,
}

impl ConstructionSet {
    pub fn graphs(&self) -> impl Iterator<Item = &SimpleGraph> {
        self.constructions.iter().map(|c| &c.graph)
    }
}

/// Recipes realizing `term` on `n` vertices. Upper-bound-only terms have none.
pub fn term_recipes(n: u64, term: Term) -> Vec<ExtremalDescription> {
    let n = n as usize;
    let join = ExtremalDescription::join;
    match term {
        Term::Bracket3 { m, l } if m == l => (0..path_extremal_recipes(n, l as usize).len())
            .map(|variant| PathExtremal {
                n,
                k: l as usize,
                variant,
            })
            .collect(),
        Term::Bracket3 { m, l } => {
            let (m, l) = (m as usize, l as usize);
            if n < m {
                return vec![Clique(n)];
            }
            let rest = n - (m - 1);
            (0..path_extremal_recipes(rest, l).len())
                .map(|variant| {
                    DisjointUnion(vec![
                        Clique(m - 1),
                        PathExtremal {
                            n: rest,
                            k: l,
                            variant,
                        },
                    ])
                })
                .collect()
        }
        Term::Bracket2 { m } => {
            let hubs = m as usize / 2 - 1;
            vec![join(Clique(hubs), EmptyGraph(n - hubs))]
        }
        Term::Explicit(formula) => match formula {
            Formula::Complete => vec![Clique(n)],
            Formula::CliqueStar { k } => {
                let k = k as usize;
                vec![join(
                    Clique(1),
                    DisjointUnion(vec![Clique(k - 3), EmptyGraph(n - k + 2)]),
                )]
            }
            Formula::CliqueStarLessOne { .. } => vec![],
            Formula::ConnectedJoin { k, i } => {
                let (k, i) = (k as usize, i as usize);
                vec![join(
                    Clique(k / 2 - 1),
                    DisjointUnion(vec![Clique(i), EmptyGraph(n - k.div_ceil(2))]),
                )]
            }
            Formula::CliqueMatching { k } => {
                let k = k as usize;
                vec![DisjointUnion(vec![
                    Clique(3 * k - 1),
                    Matching(n - 3 * k + 1),
                ])]
            }
            Formula::JoinMatching { k } => {
                let k = k as usize;
                vec![join(Clique(k - 1), Matching(n - k + 1))]
            }
            Formula::SplitJoin { l } => {
                let l = l as usize;
                vec![join(
                    Clique(l),
                    DisjointUnion(vec![Clique(2), EmptyGraph(n - l - 2)]),
                )]
            }
            Formula::ThreeNMinusFive => vec![join(
                Clique(3),
                DisjointUnion(vec![Clique(2), EmptyGraph(n - 5)]),
            )],
            Formula::LargeN { s, c } => {
                let hubs = s as usize - 1;
                if c == 1 {
                    vec![join(
                        Clique(hubs),
                        DisjointUnion(vec![Clique(2), EmptyGraph(n - hubs - 2)]),
                    )]
                } else {
                    vec![join(Clique(hubs), EmptyGraph(n - hubs))]
                }
            }
        },
    }
}

fn realize_achieving(value: &TuranValue) -> Vec<Construction> {
    value
        .achieving()
        .flat_map(|t| {
            term_recipes(value.n, t.term)
                .into_iter()
                .map(move |recipe| Construction {
                    term: t.term,
                    graph: recipe.realize(),
                    recipe,
                })
        })
        .collect()
}

/// Every extremal graph for `P_k` on `n` vertices (`K_n` when `n < k`).
pub fn construct_path_extremal(n: usize, k: usize) -> Vec<SimpleGraph> {
    path_extremal_recipes(n, k)
        .iter()
        .map(ExtremalDescription::realize)
        .collect()
}

/// The connected extremal graphs for `P_k` that attain `ex_con(n, P_k)`.
pub fn construct_con_path_extremal(n: u64, k: u64) -> Result<Vec<SimpleGraph>, FormulaError> {
    let value = ex_con_path(n, k)?;
    Ok(realize_achieving(&value)
        .into_iter()
        .map(|c| c.graph)
        .collect())
}

/// One family per max-attaining term of [`ex_forest`].
pub fn construct_forest_extremal(
    n: u64,
    forest: &PathForest,
) -> Result<ConstructionSet, FormulaError> {
    let value = ex_forest(n, forest)?;
    Ok(ConstructionSet {
        certified: value.regime.is_exact(),
        constructions: realize_achieving(&value),
        value,
    })
}

/// Graphs for every term of `value`, achieving or not. Used to check that
/// each term is a genuine lower bound.
pub fn construct_all_terms(value: &TuranValue) -> Vec<Construction> {
    value
        .terms
        .iter()
        .flat_map(|t| {
            term_recipes(value.n, t.term)
                .into_iter()
                .map(move |recipe| Construction {
                    term: t.term,
                    graph: recipe.realize(),
                    recipe,
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::canonical_form;

    fn forest(orders: &[u64]) -> PathForest {
        PathForest::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn path_examples() {
        let g = construct_path_extremal(9, 4);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].components().len(), 3);
        let g = construct_path_extremal(7, 4);
        assert_eq!(g.len(), 3);
        assert!(g.iter().all(|g| g.edge_count() == 6));
        assert_eq!(
            construct_path_extremal(4, 5),
            vec![SimpleGraph::complete(4)]
        );
    }

    #[test]
    fn connected_path_examples() {
        let g = construct_con_path_extremal(10, 6).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].edge_count(), 17);
        assert!(g[0].is_connected());

        let g = construct_con_path_extremal(6, 6).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].edge_count(), 9);
        assert_eq!(g[0].degree_sequence(), vec![5, 5, 2, 2, 2, 2]);

        // Tie at the crossover (5k-10)/4 for k = 10.
        let g = construct_con_path_extremal(10, 10).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().all(|g| g.edge_count() == 30 && g.is_connected()));
    }

    #[test]
    fn forest_examples() {
        let set = construct_forest_extremal(10, &forest(&[5, 5])).unwrap();
        assert!(set.certified);
        assert_eq!(set.constructions.len(), 1);
        let k9k1 = SimpleGraph::complete(9).disjoint_union(&SimpleGraph::empty(1));
        assert_eq!(
            canonical_form(&set.constructions[0].graph).unwrap(),
            canonical_form(&k9k1).unwrap()
        );

        let set = construct_forest_extremal(20, &forest(&[5, 5])).unwrap();
        assert_eq!(set.constructions.len(), 1);
        assert_eq!(set.constructions[0].graph.edge_count(), 55);
        assert_eq!(
            set.constructions[0].recipe.to_string(),
            "K_3 + (K_2 ∪ E_15)"
        );

        let set = construct_forest_extremal(8, &forest(&[5, 3])).unwrap();
        assert_eq!(set.constructions.len(), 1);
        assert_eq!(set.constructions[0].graph.edge_count(), 21);
        assert_eq!(set.constructions[0].graph.degree_sequence()[..7], [6; 7]);

        let set = construct_forest_extremal(20, &forest(&[7, 5])).unwrap();
        assert!(!set.certified);
    }

    #[test]
    fn every_term_is_realizable() {
        for orders in [
            &[4u64, 4][..],
            &[5, 3],
            &[5, 5],
            &[3, 3, 3],
            &[6, 5, 4],
            &[7],
        ] {
            let f = forest(orders);
            for n in f.total()..f.total() + 25 {
                let value = ex_forest(n, &f).unwrap();
                for c in construct_all_terms(&value) {
                    let want = value.terms.iter().find(|t| t.term == c.term).unwrap().value;
                    assert_eq!(c.graph.vertex_count() as u64, n);
                    assert_eq!(
                        c.graph.edge_count() as u128,
                        want,
                        "{orders:?} n={n} {}",
                        c.recipe
                    );
                }
            }
        }
    }
}
