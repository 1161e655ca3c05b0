use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{
    OracleMode, OracleOptions, OracleResult, OracleStats, PartialResult, SearchError,
    ENUMERATE_LIMIT,
};
use crate::containment::contains_linear_forest;
use crate::formulas::PathForest;
use crate::graphs::{canonize_masks, from_masks, CanonicalForm, MAX_CANON_LIMIT};

type Masks = Vec<u16>;

pub fn turan_enumerate(
    n: usize,
    forest: &PathForest,
    connected_only: bool,
) -> Result<OracleResult, SearchError> {
    turan_enumerate_with(n, forest, connected_only, &OracleOptions::default())
}

pub fn turan_enumerate_with(
    n: usize,
    forest: &PathForest,
    connected_only: bool,
    opts: &OracleOptions,
) -> Result<OracleResult, SearchError> {
    let limit = opts
        .max_order
        .unwrap_or(ENUMERATE_LIMIT)
        .min(MAX_CANON_LIMIT);
    if n > limit {
        return Err(SearchError::Capacity { n, limit });
    }
    let run = Run {
        forest,
        total: forest.total() as usize,
        start: Instant::now(),
        opts,
        nodes: AtomicU64::new(0),
        expired: AtomicBool::new(false),
    };

    let mut level: Vec<Masks> = vec![Vec::new()];
    for j in 0..n.saturating_sub(1) {
        level = run.grow(level, j)?;
    }
    let (max_edges, witnesses) = if n == 0 {
        (0, vec![Vec::new()])
    } else {
        run.finish(level, n - 1, connected_only)?
    };
    Ok(OracleResult {
        n,
        forest: forest.orders().to_vec(),
        max_edges,
        witnesses: witnesses.iter().map(|m| from_masks(m)).collect(),
        mode: OracleMode::Enumerate,
        connected_only,
        stats: run.stats(),
    })
}

struct Run<'a> {
    forest: &'a PathForest,
    total: usize,
    start: Instant,
    opts: &'a OracleOptions,
    nodes: AtomicU64,
    expired: AtomicBool,
}

impl Run<'_> {
    fn stats(&self) -> OracleStats {
        OracleStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            seconds: self.start.elapsed().as_secs_f64(),
        }
    }

    fn out_of_time(&self) -> bool {
        if self.start.elapsed() > self.opts.budget {
            self.expired.store(true, Ordering::Relaxed);
        }
        self.expired.load(Ordering::Relaxed)
    }

    fn partial(&self, best: Option<usize>, witnesses: Vec<Masks>) -> SearchError {
        SearchError::Budget(Box::new(PartialResult {
            best,
            witnesses: witnesses.iter().map(|m| from_masks(m)).collect(),
            stats: self.stats(),
        }))
    }

    fn is_free(&self, adj: &[u16]) -> bool {
        adj.len() < self.total || contains_linear_forest(&from_masks(adj), self.forest).is_none()
    }

    /// All F-free graphs on `j + 1` vertices, one per isomorphism class,
    /// from the representatives on `j` vertices.
    fn grow(&self, level: Vec<Masks>, j: usize) -> Result<Vec<Masks>, SearchError> {
        let batches: Vec<HashMap<CanonicalForm, Masks>> = level
            .par_iter()
            .map(|parent| {
                let mut out = HashMap::new();
                if self.out_of_time() {
                    return out;
                }
                for s in 0..(1u32 << j) {
                    self.nodes.fetch_add(1, Ordering::Relaxed);
                    let child = extend(parent, s as u16);
                    let (form, order) = canonize_masks(&child);
                    if out.contains_key(&form) {
                        continue;
                    }
                    let child = relabel(&child, &order);
                    if self.is_free(&child) {
                        out.insert(form, child);
                    }
                }
                out
            })
            .collect();
        if self.expired.load(Ordering::Relaxed) {
            return Err(self.partial(None, Vec::new()));
        }
        let mut merged = HashMap::new();
        for batch in batches {
            merged.extend(batch);
        }
        let mut next: Vec<(CanonicalForm, Masks)> = merged.into_iter().collect();
        next.sort_unstable_by_key(|a| a.0);
        Ok(next.into_iter().map(|(_, m)| m).collect())
    }

    /// Last augmentation step: keeps only graphs at the running maximum.
    fn finish(
        &self,
        mut level: Vec<Masks>,
        j: usize,
        connected_only: bool,
    ) -> Result<(usize, Vec<Masks>), SearchError> {
        let edges = |m: &Masks| m.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        level.sort_by_key(|m| std::cmp::Reverse(edges(m)));
        let mut subsets: Vec<u16> = (0..(1u32 << j)).map(|s| s as u16).collect();
        subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
        let best = AtomicUsize::new(0);
        let found = AtomicBool::new(false);

        let candidates: Vec<(usize, Masks)> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let base = edges(parent);
                let mut out = Vec::new();
                if self.out_of_time() {
                    return out;
                }
                for &s in &subsets {
                    let e = base + s.count_ones() as usize;
                    if found.load(Ordering::Relaxed) && e < best.load(Ordering::Relaxed) {
                        break;
                    }
                    self.nodes.fetch_add(1, Ordering::Relaxed);
                    let child = extend(parent, s);
                    if connected_only && !from_masks(&child).is_connected() {
                        continue;
                    }
                    if self.is_free(&child) {
                        best.fetch_max(e, Ordering::Relaxed);
                        found.store(true, Ordering::Relaxed);
                        out.push((e, child));
                    }
                }
                out
            })
            .collect();

        let max = candidates.iter().map(|c| c.0).max();
        if self.expired.load(Ordering::Relaxed) {
            let witnesses = candidates
                .into_iter()
                .filter(|c| Some(c.0) == max)
                .map(|c| c.1)
                .take(1)
                .collect();
            return Err(self.partial(max, witnesses));
        }
        let Some(max) = max else {
            // Only reachable with `connected_only` when no connected F-free
            // graph exists; report the empty maximum.
            return Ok((0, Vec::new()));
        };
        let mut unique: HashMap<CanonicalForm, Masks> = HashMap::new();
        for (e, m) in candidates {
            if e == max {
                let (form, order) = canonize_masks(&m);
                unique.entry(form).or_insert_with(|| relabel(&m, &order));
            }
        }
        let mut witnesses: Vec<(CanonicalForm, Masks)> = unique.into_iter().collect();
        witnesses.sort_unstable_by_key(|a| a.0);
        Ok((max, witnesses.into_iter().map(|(_, m)| m).collect()))
    }
}

/// Adds a vertex adjacent to the vertices in `nbhd`.
fn extend(parent: &[u16], nbhd: u16) -> Masks {
    let j = parent.len();
    let mut child = Vec::with_capacity(j + 1);
    child.extend(
        parent
            .iter()
            .enumerate()
            .map(|(v, &row)| row | (((nbhd >> v) & 1) << j)),
    );
    child.push(nbhd);
    child
}

/// Relabels so that `order[p]` moves to position `p`.
fn relabel(adj: &[u16], order: &[u8]) -> Masks {
    let mut pos = [0u8; MAX_CANON_LIMIT];
    for (p, &v) in order.iter().enumerate() {
        pos[usize::from(v)] = p as u8;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = adj[usize::from(v)];
            let mut out = 0u16;
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                out |= 1 << pos[u];
            }
            out
        })
        .collect()
}
