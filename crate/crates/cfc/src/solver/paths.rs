//! Checking colorings: does every vertex pair have a path on which some
//! color appears exactly once?

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::Limits;

/// Outcome of checking a coloring over all vertex pairs.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub checked_pairs: usize,
    /// The first pair (in vertex insertion order) with no conflict-free
    /// path, when `ok` is false.
    pub failing_pair: Option<(String, String)>,
}

/// Is the given vertex sequence a simple path on which some color appears
/// exactly once? A single vertex counts as trivially conflict-free.
pub fn is_conflict_free_path(g: &Graph, coloring: &EdgeColoring, path: &[String]) -> Result<bool> {
    if path.is_empty() {
        return Err(Error::Precondition("path must contain at least one vertex".to_string()));
    }
    let mut ids = Vec::with_capacity(path.len());
    for label in path {
        let id = g.vertex_index(label).ok_or_else(|| Error::UnknownVertex(label.clone()))?;
        if ids.contains(&id) {
            return Err(Error::Precondition(format!("path repeats vertex {label:?}")));
        }
        ids.push(id);
    }
    if ids.len() == 1 {
        return Ok(true);
    }
    let mut counts = std::collections::HashMap::new();
    for pair in path.windows(2) {
        let edge = crate::graph::Edge::new(pair[0].clone(), pair[1].clone())?;
        if !g.contains_edge(&edge) {
            return Err(Error::Precondition(format!(
                "consecutive path vertices {:?} and {:?} are not adjacent",
                pair[0], pair[1]
            )));
        }
        let color = coloring
            .get(&edge)
            .ok_or_else(|| Error::PartialColoring { missing: vec![edge.key()] })?;
        *counts.entry(color).or_insert(0usize) += 1;
    }
    Ok(counts.values().any(|&c| c == 1))
}

/// Is there a conflict-free path between two given vertices? Uses the
/// default limits.
pub fn exists_conflict_free_path(
    g: &Graph,
    coloring: &EdgeColoring,
    u: &str,
    v: &str,
) -> Result<bool> {
    let limits = Limits::default();
    guard_scale(g, &limits)?;
    let ui = g.vertex_index(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
    let vi = g.vertex_index(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
    if ui == vi {
        return Ok(true);
    }
    let colors = coloring.colors_for(g)?;
    let mut budget = limits.search_steps;
    pair_has_conflict_free_path(g, &colors, coloring.num_colors(), ui, vi, &mut budget)
}

/// Checks the coloring over every vertex pair under the default limits.
pub fn verify_cfc(g: &Graph, coloring: &EdgeColoring) -> Result<Verification> {
    verify_cfc_with(g, coloring, &Limits::default())
}

/// Checks the coloring over every vertex pair: for each pair (in vertex
/// insertion order) a depth-first search enumerates simple paths until one
/// carries some color exactly once. The search spends at most
/// `limits.search_steps` edge extensions across the whole call and fails
/// loudly if that budget runs out.
pub fn verify_cfc_with(
    g: &Graph,
    coloring: &EdgeColoring,
    limits: &Limits,
) -> Result<Verification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    guard_scale(g, limits)?;
    let colors = coloring.colors_for(g)?;
    let n = g.vertex_count();
    let mut checked = 0usize;
    let mut budget = limits.search_steps;
    for i in 0..n {
        for j in (i + 1)..n {
            checked += 1;
            if !pair_has_conflict_free_path(g, &colors, coloring.num_colors(), i, j, &mut budget)? {
                return Ok(Verification {
                    ok: false,
                    checked_pairs: checked,
                    failing_pair: Some((g.label(i).to_string(), g.label(j).to_string())),
                });
            }
        }
    }
    Ok(Verification { ok: true, checked_pairs: checked, failing_pair: None })
}

fn guard_scale(g: &Graph, limits: &Limits) -> Result<()> {
    if g.edge_count() > limits.verify_max_edges {
        return Err(Error::ScaleLimit {
            what: "verify_max_edges",
            limit: limits.verify_max_edges,
            actual: g.edge_count(),
        });
    }
    Ok(())
}

/// Iterative depth-first enumeration of simple paths from `s` to `t`,
/// keeping color counts incrementally: `ones` tracks how many colors
/// currently appear exactly once on the path being built.
fn pair_has_conflict_free_path(
    g: &Graph,
    colors: &[usize],
    num_colors: usize,
    s: usize,
    t: usize,
    budget: &mut u64,
) -> Result<bool> {
    let mut counts = vec![0usize; num_colors + 1];
    let mut ones = 0usize;
    let mut on_path = vec![false; g.vertex_count()];
    // Frame = (vertex, adjacency cursor, color of the edge that entered it;
    // 0 for the root).
    let mut frames: Vec<(usize, usize, usize)> = vec![(s, 0, 0)];
    on_path[s] = true;

    macro_rules! bump {
        ($c:expr) => {{
            counts[$c] += 1;
            match counts[$c] {
                1 => ones += 1,
                2 => ones -= 1,
                _ => {}
            }
        }};
    }
    macro_rules! unbump {
        ($c:expr) => {{
            counts[$c] -= 1;
            match counts[$c] {
                0 => ones -= 1,
                1 => ones += 1,
                _ => {}
            }
        }};
    }

    while let Some(frame) = frames.last_mut() {
        let v = frame.0;
        if let Some(&(w, eid)) = g.adjacency(v).get(frame.1) {
            frame.1 += 1;
            if on_path[w] {
                continue;
            }
            if *budget == 0 {
                return Err(Error::SearchBudget {
                    u: g.label(s).to_string(),
                    v: g.label(t).to_string(),
                });
            }
            *budget -= 1;
            let c = colors[eid];
            if w == t {
                bump!(c);
                let found = ones > 0;
                unbump!(c);
                if found {
                    return Ok(true);
                }
            } else {
                bump!(c);
                on_path[w] = true;
                frames.push((w, 0, c));
            }
        } else {
            let (v, _, entry_color) = frames.pop().expect("frame exists");
            on_path[v] = false;
            if entry_color != 0 {
                unbump!(entry_color);
            }
        }
    }
    Ok(false)
}
