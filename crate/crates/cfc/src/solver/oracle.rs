//! Exhaustive search for the exact conflict-free connection number of small
//! graphs, independent of any closed form.
//!
//! For each candidate color count `t`, colorings are enumerated in
//! restricted-growth order over the edges (edge 0 gets color 1; each later
//! edge may use at most one color beyond the largest used so far). The first
//! assignment under which every vertex pair has a conflict-free path is
//! returned, so certificates are deterministic. Pruning is exact: a pair is
//! checked as soon as the last edge any of its paths uses has been colored,
//! which never changes which assignment is found first.

use std::collections::BTreeMap;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::{CfcResult, CfcValue, Limits, Method, OracleMode};

/// Exhaustive search under the default limits, with pruning.
pub fn cfc_oracle(g: &Graph) -> Result<CfcResult> {
    cfc_oracle_with(g, &Limits::default(), OracleMode::Pruned)
}

/// Exhaustive search for the exact connection number. Rejects graphs with
/// more than `limits.oracle_max_edges` edges.
pub fn cfc_oracle_with(g: &Graph, limits: &Limits, mode: OracleMode) -> Result<CfcResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 1 {
        return Ok(CfcResult {
            value: CfcValue::Exact(0),
            method: Method::Oracle,
            certificate: Some(EdgeColoring::empty()),
        });
    }
    if m > limits.oracle_max_edges {
        return Err(Error::ScaleLimit {
            what: "oracle_max_edges",
            limit: limits.oracle_max_edges,
            actual: m,
        });
    }
    let pairs = precompute_pair_paths(g);
    // Pairs indexed by the edge whose coloring completes all their paths.
    let mut by_trigger: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (pi, pair) in pairs.iter().enumerate() {
        by_trigger[pair.trigger].push(pi);
    }
    for t in 1..=(n - 1) {
        if t > limits.max_colors {
            return Err(Error::ScaleLimit {
                what: "max_colors",
                limit: limits.max_colors,
                actual: t,
            });
        }
        let mut search = Search {
            assignment: vec![0; m],
            target: t,
            pairs: &pairs,
            by_trigger: &by_trigger,
            mode,
        };
        if search.descend(0, 0) {
            let assignment: BTreeMap<Edge, usize> =
                search.assignment.iter().enumerate().map(|(id, &c)| (g.edge_at(id), c)).collect();
            return Ok(CfcResult {
                value: CfcValue::Exact(t),
                method: Method::Oracle,
                certificate: Some(EdgeColoring::new(t, assignment)?),
            });
        }
    }
    Err(Error::Internal(
        "no coloring found within the general upper bound of n - 1 colors".to_string(),
    ))
}

struct PairPaths {
    /// Each path as the edge ids it traverses.
    paths: Vec<Vec<usize>>,
    /// Largest edge id over all paths: once it is colored, the pair is
    /// decidable.
    trigger: usize,
}

struct Search<'a> {
    assignment: Vec<usize>,
    target: usize,
    pairs: &'a [PairPaths],
    by_trigger: &'a [Vec<usize>],
    mode: OracleMode,
}

impl Search<'_> {
    /// Tries every restricted-growth extension of the first `i` assigned
    /// edges; `max_used` is the largest color among them.
    fn descend(&mut self, i: usize, max_used: usize) -> bool {
        let m = self.assignment.len();
        if i == m {
            return max_used == self.target
                && (self.mode == OracleMode::Pruned
                    || self.pairs.iter().all(|p| self.pair_satisfied(p)));
        }
        // Even coloring every remaining edge with a fresh color cannot reach
        // the target: this prefix belongs to a smaller t, already refuted.
        if max_used + (m - i) < self.target {
            return false;
        }
        let top = (max_used + 1).min(self.target);
        for c in 1..=top {
            self.assignment[i] = c;
            if self.mode == OracleMode::Pruned
                && !self.by_trigger[i].iter().all(|&pi| self.pair_satisfied(&self.pairs[pi]))
            {
                continue;
            }
            if self.descend(i + 1, max_used.max(c)) {
                return true;
            }
        }
        false
    }

    /// Does some path of the pair carry a color exactly once? Only called
    /// when every edge on every path of the pair is colored.
    fn pair_satisfied(&self, pair: &PairPaths) -> bool {
        pair.paths.iter().any(|path| {
            let mut once: u32 = 0;
            let mut twice: u32 = 0;
            for &eid in path {
                let bit = 1u32 << self.assignment[eid];
                twice |= once & bit;
                once |= bit;
            }
            once & !twice != 0
        })
    }
}

fn precompute_pair_paths(g: &Graph) -> Vec<PairPaths> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for s in 0..n {
        for t in (s + 1)..n {
            let paths = all_simple_paths_edges(g, s, t);
            let trigger = paths
                .iter()
                .flat_map(|p| p.iter().copied())
                .max()
                .expect("connected graphs have a path for every pair");
            out.push(PairPaths { paths, trigger });
        }
    }
    out
}

/// Every simple path from `s` to `t`, each as its sequence of edge ids.
fn all_simple_paths_edges(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frames: Vec<(usize, usize)> = vec![(s, 0)];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[s] = true;
    let mut edge_path: Vec<usize> = Vec::new();
    while let Some(frame) = frames.last_mut() {
        let v = frame.0;
        if let Some(&(w, eid)) = g.adjacency(v).get(frame.1) {
            frame.1 += 1;
            if on_path[w] {
                continue;
            }
            if w == t {
                edge_path.push(eid);
                out.push(edge_path.clone());
                edge_path.pop();
            } else {
                on_path[w] = true;
                edge_path.push(eid);
                frames.push((w, 0));
            }
        } else {
            frames.pop();
            on_path[v] = false;
            if !edge_path.is_empty() {
                edge_path.pop();
            }
        }
    }
    out
}
