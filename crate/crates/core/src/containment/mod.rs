//! Exact linear-forest containment.
//!
//! [`contains_linear_forest`] embeds the paths longest first by depth-first
//! search. It prunes with three rules that each follow from the definitions
//! alone:
//!
//! * a path under construction must be completable inside the unused part
//!   of its endpoint's component;
//! * before each new path, the remaining orders must pack into the
//!   components of the unused vertices;
//! * among unused twins (vertices with equal neighbourhoods apart from each
//!   other) only the smallest is tried at any choice point, because swapping
//!   two unused twins is an automorphism fixing the partial embedding.
//!
//! Paths of equal order are embedded with strictly increasing start
//! vertices, and failed subproblems (unused set, next path, start bound) are
//! remembered. No edge-count bound is used.
//!
//! [`contains_forest_naive`] is an independent reference that tries every
//! injective assignment of vertices to the path positions.

mod naive;

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

pub use naive::{contains_forest_naive, NAIVE_LIMIT};

use crate::formulas::PathForest;
use crate::graphs::{bits, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContainmentError {
    #[error("naive check is limited to {limit} vertices and paths totalling {limit} (got n = {n}, total = {total})")]
    Capacity {
        n: usize,
        total: usize,
        limit: usize,
    },
}

/// Vertex-disjoint paths realizing a linear forest, one vertex sequence per
/// path in the forest's (non-increasing) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingCertificate {
    pub paths: Vec<Vec<usize>>,
}

impl EmbeddingCertificate {
    /// Re-checks lengths, adjacency of consecutive vertices and disjointness.
    pub fn verify(&self, g: &SimpleGraph, orders: &[usize]) -> bool {
        if self.paths.len() != orders.len() {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for (path, &k) in self.paths.iter().zip(orders) {
            if path.len() != k {
                return false;
            }
            for &v in path {
                if v >= g.vertex_count() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        true
    }

    pub fn verify_forest(&self, g: &SimpleGraph, forest: &PathForest) -> bool {
        self.verify(g, &orders_of(forest))
    }
}

fn orders_of(forest: &PathForest) -> Vec<usize> {
    forest.orders().iter().map(|&k| k as usize).collect()
}

/// A simple path on `k` vertices, if one exists.
pub fn contains_path(g: &SimpleGraph, k: usize) -> Option<EmbeddingCertificate> {
    embed(g, &[k])
}

pub fn contains_linear_forest(
    g: &SimpleGraph,
    forest: &PathForest,
) -> Option<EmbeddingCertificate> {
    embed(g, &orders_of(forest))
}

/// Embeds paths of the given orders (any order ≥ 0), or returns `None`.
pub fn embed(g: &SimpleGraph, orders: &[usize]) -> Option<EmbeddingCertificate> {
    let mut orders = orders.to_vec();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = orders.iter().sum();
    if total > g.vertex_count() {
        return None;
    }
    let mut e = Embedder::new(g, orders);
    if e.next_path(0) {
        Some(EmbeddingCertificate { paths: e.paths })
    } else {
        None
    }
}

struct Embedder<'g> {
    g: &'g SimpleGraph,
    words: usize,
    orders: Vec<usize>,
    /// Twin masks, one row per vertex.
    twins: Vec<u64>,
    unused: Vec<u64>,
    paths: Vec<Vec<usize>>,
    failed: HashSet<(Vec<u64>, usize, usize)>,
    scratch: Vec<u64>,
    frontier: Vec<u64>,
}

impl<'g> Embedder<'g> {
    fn new(g: &'g SimpleGraph, orders: Vec<usize>) -> Self {
        let n = g.vertex_count();
        let words = g.row_words();
        let mut twins = vec![0u64; n * words];
        for u in 0..n {
            for v in (u + 1)..n {
                let same = (0..words).all(|w| {
                    let mut a = g.row(u)[w];
                    let mut b = g.row(v)[w];
                    if v / 64 == w {
                        a &= !(1 << (v % 64));
                    }
                    if u / 64 == w {
                        b &= !(1 << (u % 64));
                    }
                    a == b
                });
                if same {
                    twins[u * words + v / 64] |= 1 << (v % 64);
                    twins[v * words + u / 64] |= 1 << (u % 64);
                }
            }
        }
        let mut unused = vec![0u64; words];
        for v in 0..n {
            unused[v / 64] |= 1 << (v % 64);
        }
        let paths = orders.iter().map(|&k| Vec::with_capacity(k)).collect();
        Self {
            g,
            words,
            orders,
            twins,
            unused,
            paths,
            failed: HashSet::new(),
            scratch: vec![0; words],
            frontier: vec![0; words],
        }
    }

    fn is_unused(&self, v: usize) -> bool {
        self.unused[v / 64] >> (v % 64) & 1 == 1
    }

    fn take(&mut self, idx: usize, v: usize) {
        self.unused[v / 64] &= !(1 << (v % 64));
        self.paths[idx].push(v);
    }

    fn give_back(&mut self, idx: usize) {
        let v = self.paths[idx].pop().expect("non-empty path");
        self.unused[v / 64] |= 1 << (v % 64);
    }

    fn has_tried_twin(&self, v: usize, tried: &[u64]) -> bool {
        let row = &self.twins[v * self.words..(v + 1) * self.words];
        row.iter().zip(tried).any(|(a, b)| a & b != 0)
    }

    /// Starts path `idx` (all earlier paths are complete).
    fn next_path(&mut self, idx: usize) -> bool {
        if idx == self.orders.len() {
            return true;
        }
        let k = self.orders[idx];
        if k == 0 {
            return self.next_path(idx + 1);
        }
        let lower = if idx > 0 && self.orders[idx - 1] == k {
            self.paths[idx - 1][0] + 1
        } else {
            0
        };
        let key = (self.unused.clone(), idx, lower);
        if self.failed.contains(&key) || !self.packs(idx) {
            return false;
        }
        let candidates: Vec<usize> = bits(&self.unused).filter(|&v| v >= lower).collect();
        let mut tried = vec![0u64; self.words];
        for s in candidates {
            if self.has_tried_twin(s, &tried) {
                continue;
            }
            tried[s / 64] |= 1 << (s % 64);
            self.take(idx, s);
            if self.extend(idx, k - 1) {
                return true;
            }
            self.give_back(idx);
        }
        self.failed.insert(key);
        false
    }

    /// Grows path `idx` by `remaining` more vertices.
    fn extend(&mut self, idx: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return self.next_path(idx + 1);
        }
        let end = *self.paths[idx].last().expect("started path");
        if !self.reaches(end, remaining) {
            return false;
        }
        let candidates: Vec<usize> = self
            .g
            .neighbors(end)
            .filter(|&v| self.is_unused(v))
            .collect();
        let mut tried = vec![0u64; self.words];
        for v in candidates {
            if self.has_tried_twin(v, &tried) {
                continue;
            }
            tried[v / 64] |= 1 << (v % 64);
            self.take(idx, v);
            if self.extend(idx, remaining - 1) {
                return true;
            }
            self.give_back(idx);
        }
        false
    }

    /// Whether at least `need` unused vertices are reachable from `from`
    /// through unused vertices.
    fn reaches(&mut self, from: usize, need: usize) -> bool {
        let words = self.words;
        for w in 0..words {
            self.scratch[w] = self.g.row(from)[w] & self.unused[w];
            self.frontier[w] = self.scratch[w];
        }
        loop {
            let seen: usize = self.scratch.iter().map(|w| w.count_ones() as usize).sum();
            if seen >= need {
                return true;
            }
            let mut next = vec![0u64; words];
            for v in bits(&self.frontier) {
                for (w, slot) in next.iter_mut().enumerate() {
                    *slot |= self.g.row(v)[w];
                }
            }
            let mut grew = false;
            for ((slot, seen), free) in next.iter_mut().zip(&mut self.scratch).zip(&self.unused) {
                *slot &= free & !*seen;
                *seen |= *slot;
                grew |= *slot != 0;
            }
            if !grew {
                return false;
            }
            self.frontier.copy_from_slice(&next);
        }
    }

    /// Whether `orders[idx..]` can be packed into the components induced
    /// on the unused vertices.
    fn packs(&self, idx: usize) -> bool {
        let rest = &self.orders[idx..];
        let need: usize = rest.iter().sum();
        let free: usize = self.unused.iter().map(|w| w.count_ones() as usize).sum();
        if need > free {
            return false;
        }
        let mut caps = self.component_sizes();
        caps.sort_unstable_by(|a, b| b.cmp(a));
        if caps.first().copied().unwrap_or(0) < rest[0] {
            return false;
        }
        fn assign(orders: &[usize], caps: &mut [usize]) -> bool {
            let Some((&k, tail)) = orders.split_first() else {
                return true;
            };
            for i in 0..caps.len() {
                if caps[i] < k || caps[..i].contains(&caps[i]) {
                    continue;
                }
                caps[i] -= k;
                let ok = assign(tail, caps);
                caps[i] += k;
                if ok {
                    return true;
                }
            }
            false
        }
        assign(rest, &mut caps)
    }

    fn component_sizes(&self) -> Vec<usize> {
        let words = self.words;
        let mut left = self.unused.clone();
        let mut sizes = Vec::new();
        loop {
            let Some(start) = bits(&left).next() else {
                break;
            };
            let mut comp = vec![0u64; words];
            comp[start / 64] |= 1 << (start % 64);
            let mut frontier = comp.clone();
            loop {
                let mut next = vec![0u64; words];
                for v in bits(&frontier) {
                    for (w, slot) in next.iter_mut().enumerate() {
                        *slot |= self.g.row(v)[w];
                    }
                }
                let mut grew = false;
                for w in 0..words {
                    next[w] &= left[w] & !comp[w];
                    comp[w] |= next[w];
                    grew |= next[w] != 0;
                }
                if !grew {
                    break;
                }
                frontier = next;
            }
            for w in 0..words {
                left[w] &= !comp[w];
            }
            sizes.push(comp.iter().map(|w| w.count_ones() as usize).sum());
        }
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::ExtremalDescription::{self, *};

    fn forest(orders: &[u64]) -> PathForest {
        PathForest::new(orders.to_vec()).unwrap()
    }

    #[test]
    fn path_examples() {
        let c5 = SimpleGraph::cycle(5);
        let cert = contains_path(&c5, 5).unwrap();
        assert!(cert.verify(&c5, &[5]));
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(contains_path(&star, 4).is_none());
        assert!(contains_path(&star, 3).is_some());
        for k in 3..10 {
            assert!(contains_path(&SimpleGraph::complete(k - 1), k).is_none());
        }
        assert!(contains_path(&SimpleGraph::empty(3), 1).is_some());
        assert!(contains_path(&SimpleGraph::empty(3), 2).is_none());
    }

    #[test]
    fn forest_examples() {
        let join = ExtremalDescription::join(Clique(4), EmptyGraph(6)).realize();
        let cert = contains_linear_forest(&join, &forest(&[5, 5])).unwrap();
        assert!(cert.verify_forest(&join, &forest(&[5, 5])));

        let k9k1 = SimpleGraph::complete(9).disjoint_union(&SimpleGraph::empty(1));
        assert!(contains_linear_forest(&k9k1, &forest(&[5, 5])).is_none());

        let p9 = SimpleGraph::path(9);
        let cert = contains_linear_forest(&p9, &forest(&[5, 3])).unwrap();
        assert!(cert.verify_forest(&p9, &forest(&[5, 3])));

        let split =
            ExtremalDescription::join(Clique(3), DisjointUnion(vec![Clique(2), EmptyGraph(7)]))
                .realize();
        assert_eq!(split.vertex_count(), 12);
        assert!(contains_linear_forest(&split, &forest(&[5, 5])).is_none());
    }

    #[test]
    fn too_few_vertices() {
        let g = SimpleGraph::complete(7);
        assert!(contains_linear_forest(&g, &forest(&[4, 4])).is_none());
        assert!(contains_linear_forest(&g, &forest(&[4, 3])).is_some());
    }

    #[test]
    fn large_twin_heavy_hosts() {
        // K_11 + E_49 hosts no 3·P_8 (needs 12 hubs) but does host 3·P_7.
        let g = ExtremalDescription::join(Clique(11), EmptyGraph(49)).realize();
        assert!(contains_linear_forest(&g, &forest(&[8, 8, 8])).is_none());
        let cert = contains_linear_forest(&g, &forest(&[7, 7, 7])).unwrap();
        assert!(cert.verify_forest(&g, &forest(&[7, 7, 7])));
        let g = SimpleGraph::complete(23)
            .disjoint_union(&SimpleGraph::complete(7).disjoint_union(&SimpleGraph::complete(7)));
        assert!(contains_linear_forest(&g, &forest(&[8, 8, 8])).is_none());
    }
}
