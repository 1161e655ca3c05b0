use std::fmt;

use serde::Serialize;

use super::SimpleGraph;
use crate::formulas::{choose2, EdgeCount};

/// A symbolic recipe for an extremal graph. Parts are laid out left to
/// right on consecutive vertex blocks when realized.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremalDescription {
    Clique(usize),
    EmptyGraph(usize),
    /// `⌊a/2⌋` disjoint edges on `a` vertices; odd `a` leaves one vertex isolated.
    Matching(usize),
    DisjointUnion(Vec<ExtremalDescription>),
    Join(Box<ExtremalDescription>, Box<ExtremalDescription>),
    /// The `variant`-th extremal graph for `P_k` on `n` vertices, in the
    /// order of [`path_extremal_recipes`].
    PathExtremal {
        n: usize,
        k: usize,
        variant: usize,
    },
}

use ExtremalDescription::*;

impl ExtremalDescription {
    pub fn join(left: ExtremalDescription, right: ExtremalDescription) -> Self {
        Join(Box::new(left), Box::new(right))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Clique(a) | EmptyGraph(a) | Matching(a) => *a,
            DisjointUnion(parts) => parts.iter().map(Self::vertex_count).sum(),
            Join(l, r) => l.vertex_count() + r.vertex_count(),
            PathExtremal { n, .. } => *n,
        }
    }

    /// Edge count implied by the recipe, without building the graph.
    pub fn predicted_edges(&self) -> EdgeCount {
        match self {
            Clique(a) => choose2(*a as u64),
            EmptyGraph(_) => 0,
            Matching(a) => (*a / 2) as EdgeCount,
            DisjointUnion(parts) => parts.iter().map(Self::predicted_edges).sum(),
            Join(l, r) => {
                l.predicted_edges()
                    + r.predicted_edges()
                    + (l.vertex_count() as EdgeCount) * (r.vertex_count() as EdgeCount)
            }
            PathExtremal { .. } => self.expand_path().predicted_edges(),
        }
    }

    /// Whether every `PathExtremal` variant index exists.
    pub fn is_well_formed(&self) -> bool {
        match self {
            Clique(_) | EmptyGraph(_) | Matching(_) => true,
            DisjointUnion(parts) => parts.iter().all(Self::is_well_formed),
            Join(l, r) => l.is_well_formed() && r.is_well_formed(),
            PathExtremal { n, k, variant } => {
                *k >= 2 && *variant < path_extremal_recipes(*n, *k).len()
            }
        }
    }

    fn expand_path(&self) -> ExtremalDescription {
        match self {
            PathExtremal { n, k, variant } => path_extremal_recipes(*n, *k)
                .into_iter()
                .nth(*variant)
                .unwrap_or_else(|| panic!("no variant {variant} of Ex({n}, P_{k})")),
            other => other.clone(),
        }
    }

    /// Builds the labeled graph.
    ///
    /// Panics on a `PathExtremal` variant that does not exist; see
    /// [`is_well_formed`](Self::is_well_formed).
    pub fn realize(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.vertex_count());
        self.place(&mut g, 0);
        g
    }

    fn place(&self, g: &mut SimpleGraph, base: usize) {
        match self {
            Clique(a) => {
                for u in 0..*a {
                    for v in (u + 1)..*a {
                        g.add_edge(base + u, base + v);
                    }
                }
            }
            EmptyGraph(_) => {}
            Matching(a) => {
                for i in 0..*a / 2 {
                    g.add_edge(base + 2 * i, base + 2 * i + 1);
                }
            }
            DisjointUnion(parts) => {
                let mut at = base;
                for part in parts {
                    part.place(g, at);
                    at += part.vertex_count();
                }
            }
            Join(l, r) => {
                let split = base + l.vertex_count();
                l.place(g, base);
                r.place(g, split);
                for u in base..split {
                    for v in split..split + r.vertex_count() {
                        g.add_edge(u, v);
                    }
                }
            }
            PathExtremal { .. } => self.expand_path().place(g, base),
        }
    }
}

/// Every extremal graph for `P_k` on `n` vertices. For `n < k` this is `K_n`;
/// otherwise with `n = t(k-1) + r`, `0 ≤ r < k-1`, the graph
/// `t·K_{k-1} ∪ K_r`, followed (for even `k`, `t > 0` and
/// `r ∈ {k/2, (k-2)/2}`) by `(t-s-1)·K_{k-1} ∪ (K_{(k-2)/2} + K̄_{k/2+s(k-1)+r})`
/// for `s = 0..t`.
pub fn path_extremal_recipes(n: usize, k: usize) -> Vec<ExtremalDescription> {
    if n < k {
        return vec![Clique(n)];
    }
    let (t, r) = (n / (k - 1), n % (k - 1));
    let cliques = |count: usize, tail: ExtremalDescription| {
        let mut parts = vec![Clique(k - 1); count];
        parts.push(tail);
        DisjointUnion(parts)
    };
    let mut out = vec![cliques(t, Clique(r))];
    if k.is_multiple_of(2) && t > 0 && (r == k / 2 || r == (k - 2) / 2) {
        for s in 0..t {
            let star =
                ExtremalDescription::join(Clique((k - 2) / 2), EmptyGraph(k / 2 + s * (k - 1) + r));
            out.push(cliques(t - s - 1, star));
        }
    }
    out
}

impl fmt::Display for ExtremalDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(d: &ExtremalDescription, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match d {
                DisjointUnion(parts) if parts.len() > 1 => write!(f, "({d})"),
                Join(..) => write!(f, "({d})"),
                _ => write!(f, "{d}"),
            }
        }
        match self {
            Clique(a) => write!(f, "K_{a}"),
            EmptyGraph(a) => write!(f, "E_{a}"),
            Matching(a) => write!(f, "M_{a}"),
            DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ∪ ")?;
                    }
                    part(p, f)?;
                }
                Ok(())
            }
            Join(l, r) => {
                part(l, f)?;
                f.write_str(" + ")?;
                part(r, f)
            }
            PathExtremal { n, k, variant } => write!(f, "Ex({n},P_{k})#{variant}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realize_examples() {
        assert_eq!(Clique(4).realize().edge_count(), 6);
        let g = Matching(7).realize();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(6), 0);
        let d = ExtremalDescription::join(Clique(3), DisjointUnion(vec![Clique(2), EmptyGraph(5)]));
        assert_eq!(d.vertex_count(), 10);
        assert_eq!(d.predicted_edges(), 25);
        assert_eq!(d.realize().edge_count(), 25);
        assert_eq!(d.to_string(), "K_3 + (K_2 ∪ E_5)");
    }

    #[test]
    fn path_families() {
        let r = path_extremal_recipes(7, 4);
        assert_eq!(r.len(), 3);
        for d in &r {
            assert_eq!(d.vertex_count(), 7);
            assert_eq!(d.predicted_edges(), 6);
            assert_eq!(d.realize().edge_count(), 6);
        }
        assert_eq!(path_extremal_recipes(9, 4).len(), 1);
        assert_eq!(path_extremal_recipes(4, 5), vec![Clique(4)]);
        let d = PathExtremal {
            n: 7,
            k: 4,
            variant: 2,
        };
        assert!(d.is_well_formed());
        assert_eq!(d.realize().degree_sequence()[0], 6);
        assert!(!PathExtremal {
            n: 7,
            k: 4,
            variant: 3
        }
        .is_well_formed());
    }
}
