use std::collections::HashSet;
use std::time::Instant;

use super::{
    OracleMode, OracleOptions, OracleResult, OracleStats, PartialResult, SearchError,
    BRANCH_BOUND_LIMIT,
};
use crate::containment::contains_linear_forest;
use crate::formulas::PathForest;
use crate::graphs::{
    canonize_masks, construct_forest_extremal, to_masks, CanonicalForm, SimpleGraph,
    MAX_CANON_LIMIT,
};

pub fn turan_branch_bound(n: usize, forest: &PathForest) -> Result<OracleResult, SearchError> {
    turan_branch_bound_with(n, forest, &OracleOptions::default())
}

pub fn turan_branch_bound_with(
    n: usize,
    forest: &PathForest,
    opts: &OracleOptions,
) -> Result<OracleResult, SearchError> {
    let limit = opts
        .max_order
        .unwrap_or(BRANCH_BOUND_LIMIT)
        .min(MAX_CANON_LIMIT);
    if n > limit {
        return Err(SearchError::Capacity { n, limit });
    }
    let mut search = Search {
        forest,
        start: Instant::now(),
        budget: opts.budget,
        best: None,
        witnesses: Vec::new(),
        visited: HashSet::new(),
        nodes: 0,
    };
    if opts.seeded {
        search.seed(n)?;
    }
    search.visit(SimpleGraph::complete(n))?;
    let stats = search.stats();
    Ok(OracleResult {
        n,
        forest: forest.orders().to_vec(),
        max_edges: search.best.unwrap_or(0),
        witnesses: search.witnesses,
        mode: OracleMode::BranchBound,
        connected_only: false,
        stats,
    })
}

struct Search<'a> {
    forest: &'a PathForest,
    start: Instant,
    budget: std::time::Duration,
    best: Option<usize>,
    witnesses: Vec<SimpleGraph>,
    visited: HashSet<CanonicalForm>,
    nodes: u64,
}

impl Search<'_> {
    fn stats(&self) -> OracleStats {
        OracleStats {
            nodes: self.nodes,
            seconds: self.start.elapsed().as_secs_f64(),
        }
    }

    /// Lower bound from the largest construction that is verifiably F-free.
    fn seed(&mut self, n: usize) -> Result<(), SearchError> {
        let set = construct_forest_extremal(n as u64, self.forest)?;
        for g in set.graphs() {
            if contains_linear_forest(g, self.forest).is_none() {
                self.record(g.clone());
            }
        }
        Ok(())
    }

    fn record(&mut self, g: SimpleGraph) {
        let e = g.edge_count();
        match self.best {
            Some(b) if e < b => {}
            Some(b) if e == b => {
                if self.witnesses.is_empty() {
                    self.witnesses.push(g);
                }
            }
            _ => {
                self.best = Some(e);
                self.witnesses = vec![g];
            }
        }
    }

    fn visit(&mut self, g: SimpleGraph) -> Result<(), SearchError> {
        self.nodes += 1;
        if self.start.elapsed() > self.budget {
            return Err(SearchError::Budget(Box::new(PartialResult {
                best: self.best,
                witnesses: self.witnesses.clone(),
                stats: self.stats(),
            })));
        }
        let Some(cert) = contains_linear_forest(&g, self.forest) else {
            self.record(g);
            return Ok(());
        };
        let e = g.edge_count();
        if self.best.is_some_and(|b| e - 1 <= b) {
            return Ok(());
        }
        let mut copy: Vec<(usize, usize)> = cert
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        copy.sort_unstable();
        for (u, v) in copy {
            let mut h = g.clone();
            h.remove_edge(u, v);
            let (form, _) = canonize_masks(&to_masks(&h));
            if self.visited.insert(form) {
                self.visit(h)?;
            }
        }
        Ok(())
    }
}
