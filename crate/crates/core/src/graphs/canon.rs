//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest column-major upper-triangle
//! bit string over all relabelings that respect a colour refinement of the
//! vertices (degree, then iterated neighbour-colour multisets). The search
//! prunes on prefixes of that string and tries only one vertex from each
//! set of unused twins, since swapping twins is an automorphism.

use std::cmp::Ordering;
use std::fmt;

use super::{GraphError, SimpleGraph};

/// Default order limit for canonical forms.
pub const DEFAULT_CANON_LIMIT: usize = 12;
/// Hard limit imposed by the 16-bit adjacency masks used internally.
pub const MAX_CANON_LIMIT: usize = 16;

/// Isomorphism-invariant fingerprint: equal iff the graphs are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    /// Column-major upper triangle; the first bit is the most significant.
    bits: u128,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        usize::from(self.n)
    }

    /// The canonical byte string: graph6 of the canonical relabeling.
    pub fn to_bytes(&self) -> Vec<u8> {
        super::encode_graph6_bytes(&self.to_graph())
    }

    /// The canonically relabeled graph.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let len = n * n.saturating_sub(1) / 2;
        let mut g = SimpleGraph::empty(n);
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - idx) & 1 == 1 {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bytes = self.to_bytes();
        write!(f, "CanonicalForm({})", String::from_utf8_lossy(&bytes))
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(
    g: &SimpleGraph,
    limit: usize,
) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g, limit).map(|(form, _)| form)
}

/// Canonical form plus the labeling `v -> position` that produces it.
pub fn canonical_labeling(
    g: &SimpleGraph,
    limit: usize,
) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.vertex_count();
    let limit = limit.min(MAX_CANON_LIMIT);
    if n > limit {
        return Err(GraphError::Capacity { n, limit });
    }
    let masks = to_masks(g);
    let (form, order) = canonize_masks(&masks);
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[usize::from(v)] = pos;
    }
    Ok((form, labeling))
}

pub(crate) fn to_masks(g: &SimpleGraph) -> Vec<u16> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u))
        .collect()
}

pub(crate) fn from_masks(adj: &[u16]) -> SimpleGraph {
    let mut g = SimpleGraph::empty(adj.len());
    for (u, &row) in adj.iter().enumerate() {
        let mut higher = row & !((2u32 << u) - 1) as u16;
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            g.add_edge(u, v);
        }
    }
    g
}

/// Canonical form of a graph given as adjacency masks (`n ≤ 16`). Returns
/// the form and the vertex placed at each position.
pub(crate) fn canonize_masks(adj: &[u16]) -> (CanonicalForm, Vec<u8>) {
    let n = adj.len();
    debug_assert!(n <= MAX_CANON_LIMIT);
    if n <= 1 {
        return (
            CanonicalForm {
                n: n as u8,
                bits: 0,
            },
            (0..n as u8).collect(),
        );
    }
    let color = refine_colors(adj);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut twins = [0u16; MAX_CANON_LIMIT];
    for u in 0..n {
        for v in (u + 1)..n {
            let (bu, bv) = (1u16 << u, 1u16 << v);
            if adj[u] & !bv == adj[v] & !bu {
                twins[u] |= bv;
                twins[v] |= bu;
            }
        }
    }
    let mut search = Search {
        n,
        adj,
        color: &color,
        slot_color: &slot_color,
        twins,
        order: [0; MAX_CANON_LIMIT],
        cur: [0; MAX_CANON_LIMIT],
        best: [0; MAX_CANON_LIMIT],
        best_order: [0; MAX_CANON_LIMIT],
        have_best: false,
    };
    search.run(0, 0);
    let mut bits = 0u128;
    for j in 1..n {
        bits = (bits << j) | u128::from(search.best[j]);
    }
    (
        CanonicalForm { n: n as u8, bits },
        search.best_order[..n].to_vec(),
    )
}

/// Colour refinement with colours named by the rank of their signature, so
/// the final colouring is isomorphism-invariant.
fn refine_colors(adj: &[u16]) -> Vec<u32> {
    let n = adj.len();
    let mut color: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut classes = distinct(&color);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("present") as u32)
            .collect();
        let next_classes = sorted.len();
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

fn distinct(values: &[u32]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    color: &'a [u32],
    slot_color: &'a [u32],
    twins: [u16; MAX_CANON_LIMIT],
    /// Vertex placed at each position.
    order: [u8; MAX_CANON_LIMIT],
    /// Column `j` holds the adjacency of position `j` to positions `0..j`,
    /// position 0 most significant.
    cur: [u16; MAX_CANON_LIMIT],
    best: [u16; MAX_CANON_LIMIT],
    best_order: [u8; MAX_CANON_LIMIT],
    have_best: bool,
}

impl Search<'_> {
    fn prefix_cmp(&self, j: usize) -> Ordering {
        if !self.have_best {
            return Ordering::Less;
        }
        self.cur[..j].cmp(&self.best[..j])
    }

    fn column(&self, j: usize, v: usize) -> u16 {
        let mut col = 0u16;
        for i in 0..j {
            let u = usize::from(self.order[i]);
            col = (col << 1) | (self.adj[u] >> v & 1);
        }
        col
    }

    fn run(&mut self, j: usize, used: u16) {
        if j == self.n {
            if !self.have_best || self.cur[..j] < self.best[..j] {
                self.best = self.cur;
                self.best_order = self.order;
                self.have_best = true;
            }
            return;
        }
        let want = self.slot_color[j];
        let mut tried = 0u16;
        for v in 0..self.n {
            let bit = 1u16 << v;
            if used & bit != 0 || self.color[v] != want || self.twins[v] & tried != 0 {
                continue;
            }
            tried |= bit;
            let ord = self.prefix_cmp(j);
            if ord == Ordering::Greater {
                return;
            }
            let col = self.column(j, v);
            if ord == Ordering::Equal && col > self.best[j] {
                continue;
            }
            self.order[j] = v as u8;
            self.cur[j] = col;
            self.run(j + 1, used | bit);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relabeled_paths_agree() {
        let a = SimpleGraph::path(4);
        let b = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let tri = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::empty(1));
        let p3 = SimpleGraph::path(3).disjoint_union(&SimpleGraph::empty(1));
        assert_ne!(canonical_form(&tri).unwrap(), canonical_form(&p3).unwrap());
        // Same degree sequence, different graphs: C_6 vs 2·K_3.
        let c6 = SimpleGraph::cycle(6);
        let two_tri = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::complete(3));
        assert_ne!(
            canonical_form(&c6).unwrap(),
            canonical_form(&two_tri).unwrap()
        );
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let forms: HashSet<_> = (0u32..64)
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                canonical_form(&SimpleGraph::from_edges(4, &edges).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn capacity_error() {
        let g = SimpleGraph::empty(13);
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::Capacity { n: 13, limit: 12 })
        ));
        assert!(canonical_form_with_limit(&g, 16).is_ok());
        assert!(canonical_form_with_limit(&SimpleGraph::empty(17), 40).is_err());
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = SimpleGraph::from_edges(6, &[(0, 5), (5, 2), (2, 3), (1, 4), (4, 0)]).unwrap();
        let (form, labeling) = canonical_labeling(&g, 12).unwrap();
        assert_eq!(g.permuted(&labeling), form.to_graph());
        assert_eq!(
            form.to_bytes(),
            crate::graphs::encode_graph6_bytes(&form.to_graph())
        );
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in [12usize, 16] {
            canonical_form_with_limit(&SimpleGraph::complete(n), 16).unwrap();
            canonical_form_with_limit(&SimpleGraph::empty(n), 16).unwrap();
            canonical_form_with_limit(&SimpleGraph::cycle(n), 16).unwrap();
        }
    }

    #[test]
    fn masks_roundtrip() {
        let g = SimpleGraph::cycle(7);
        assert_eq!(from_masks(&to_masks(&g)), g);
    }
}
