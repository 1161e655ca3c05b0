use super::ContainmentError;
use crate::formulas::PathForest;
use crate::graphs::SimpleGraph;

/// Bound on both the host order and the total forest order for the naive
/// check.
pub const NAIVE_LIMIT: usize = 10;

/// Tries every injective map from path positions to vertices. No symmetry
/// breaking or structural pruning; intended as a cross-check only.
pub fn contains_forest_naive(
    g: &SimpleGraph,
    forest: &PathForest,
) -> Result<bool, ContainmentError> {
    let orders: Vec<usize> = forest.orders().iter().map(|&k| k as usize).collect();
    let total: usize = orders.iter().sum();
    let n = g.vertex_count();
    if n > NAIVE_LIMIT || total > NAIVE_LIMIT {
        return Err(ContainmentError::Capacity {
            n,
            total,
            limit: NAIVE_LIMIT,
        });
    }
    if total > n {
        return Ok(false);
    }
    // Position p starts a new path iff it is in `starts`.
    let mut starts = vec![false; total];
    let mut at = 0;
    for &k in &orders {
        starts[at] = true;
        at += k;
    }
    let mut used = vec![false; n];
    let mut tuple = Vec::with_capacity(total);
    Ok(place(g, &starts, &mut used, &mut tuple))
}

fn place(g: &SimpleGraph, starts: &[bool], used: &mut [bool], tuple: &mut Vec<usize>) -> bool {
    let p = tuple.len();
    if p == starts.len() {
        return true;
    }
    for v in 0..g.vertex_count() {
        if used[v] || (!starts[p] && !g.has_edge(tuple[p - 1], v)) {
            continue;
        }
        used[v] = true;
        tuple.push(v);
        if place(g, starts, used, tuple) {
            return true;
        }
        tuple.pop();
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let f = |o: &[u64]| PathForest::new(o.to_vec()).unwrap();
        assert!(!contains_forest_naive(&SimpleGraph::empty(5), &f(&[3])).unwrap());
        assert!(contains_forest_naive(&SimpleGraph::complete(6), &f(&[3, 3])).unwrap());
        assert!(!contains_forest_naive(&SimpleGraph::complete(5), &f(&[3, 3])).unwrap());
        assert!(contains_forest_naive(&SimpleGraph::empty(11), &f(&[3])).is_err());
    }
}
