use std::fmt;

use serde::{Deserialize, Serialize};

use super::GraphError;

const WORD: usize = 64;

/// A labeled undirected simple graph on vertices `0..n`, stored as dense
/// adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl SimpleGraph {
    /// The empty graph `K̄_n`.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Self {
            n,
            words,
            rows: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !g.add_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Words per adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency bit row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `uv`; returns `false` if it was already present.
    ///
    /// Panics on a loop or an endpoint `≥ n`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
        self.edges += 1;
        true
    }

    /// Deletes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
        self.edges -= 1;
        true
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// `self ∪ other` with `other` shifted to `n..n+other.n`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Self {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// `self + other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &SimpleGraph) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Degree sequence sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Iterates set bit positions of a word slice.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            }
        })
    })
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Serialized as the adjacency list `{"n": …, "edges": [[u, v], …]}`.
impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EdgeList {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let list = EdgeList::deserialize(deserializer)?;
        let edges: Vec<_> = list.edges.iter().map(|&[u, v]| (u, v)).collect();
        SimpleGraph::from_edges(list.n, &edges).map_err(serde::de::Error::custom)
    }
}
