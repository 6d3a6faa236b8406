//! Edge colorings: the serializable assignment type and the constructive
//! colorings behind each closed-form case.
//!
//! Like the numeric results, constructions are deterministic: the same graph
//! always yields the same coloring.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::{ceil_log2, verify_cfc_with, Limits};
use crate::structure::{
    cut_component_shapes, is_two_edge_connected, nontrivial_block_matching, ComponentKind,
};

/// A total assignment of colors `1..=num_colors` to edges, with
/// `num_colors` equal to the largest color actually used (0 when empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    num_colors: usize,
    assignment: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    /// Wraps an assignment, enforcing the color-range invariant.
    pub fn new(num_colors: usize, assignment: BTreeMap<Edge, usize>) -> Result<Self> {
        let mut max_used = 0usize;
        for (edge, &color) in &assignment {
            if color == 0 {
                return Err(Error::InvalidColoring(format!(
                    "edge {edge} has color 0; colors start at 1"
                )));
            }
            if color > num_colors {
                return Err(Error::InvalidColoring(format!(
                    "edge {edge} has color {color}, outside 1..={num_colors}"
                )));
            }
            max_used = max_used.max(color);
        }
        if max_used != num_colors {
            return Err(Error::InvalidColoring(format!(
                "num_colors is {num_colors} but the largest color used is {max_used}"
            )));
        }
        Ok(EdgeColoring { num_colors, assignment })
    }

    /// The coloring of an edgeless graph.
    pub fn empty() -> Self {
        EdgeColoring { num_colors: 0, assignment: BTreeMap::new() }
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn get(&self, edge: &Edge) -> Option<usize> {
        self.assignment.get(edge).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, usize> {
        &self.assignment
    }

    /// Colors indexed by edge id of `g`. Fails if the coloring mentions edges
    /// outside `g` or misses edges of `g`.
    pub fn colors_for(&self, g: &Graph) -> Result<Vec<usize>> {
        let alien: Vec<String> =
            self.assignment.keys().filter(|e| !g.contains_edge(e)).map(Edge::key).collect();
        if !alien.is_empty() {
            return Err(Error::AlienEdges { alien });
        }
        let mut colors = Vec::with_capacity(g.edge_count());
        let mut missing = Vec::new();
        for id in 0..g.edge_count() {
            let edge = g.edge_at(id);
            match self.assignment.get(&edge) {
                Some(&c) => colors.push(c),
                None => missing.push(edge.key()),
            }
        }
        if !missing.is_empty() {
            missing.sort();
            return Err(Error::PartialColoring { missing });
        }
        Ok(colors)
    }

    /// Parses `{"num_colors": n, "assignment": {"u|v": c, ...}}`, resolving
    /// every key against the edges of `g` so that nested line-graph labels
    /// never need to be split.
    pub fn from_json_for_graph(text: &str, g: &Graph) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            num_colors: usize,
            assignment: BTreeMap<String, usize>,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        let by_key: BTreeMap<String, Edge> = g.edges().map(|e| (e.key(), e)).collect();
        let alien: Vec<String> =
            raw.assignment.keys().filter(|k| !by_key.contains_key(*k)).cloned().collect();
        if !alien.is_empty() {
            return Err(Error::AlienEdges { alien });
        }
        let assignment = raw.assignment.into_iter().map(|(k, c)| (by_key[&k].clone(), c)).collect();
        EdgeColoring::new(raw.num_colors, assignment)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("coloring serializes")
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("num_colors", &self.num_colors)?;
        let rendered: BTreeMap<String, usize> =
            self.assignment.iter().map(|(e, &c)| (e.key(), c)).collect();
        map.serialize_entry("assignment", &rendered)?;
        map.end()
    }
}

/// Colors of a path's edges, first to last: position `i` (1-based) gets one
/// more than the number of trailing zero bits of `i`. Any contiguous run then
/// contains exactly one maximal color, so every subpath is conflict-free with
/// `⌈log2(len + 1)⌉` colors in total.
pub(crate) fn ruler_colors(len: usize) -> Vec<usize> {
    (1..=len).map(|i| i.trailing_zeros() as usize + 1).collect()
}

/// The position-based coloring of a path graph, starting from the endpoint
/// inserted first.
pub fn ruler_path_coloring(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_path() {
        return Err(Error::Precondition("graph is not a path".to_string()));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(EdgeColoring::empty());
    }
    let order = path_vertex_order(g);
    let colors = ruler_colors(m);
    let mut assignment = BTreeMap::new();
    for (i, pair) in order.windows(2).enumerate() {
        let edge = Edge::new(g.label(pair[0]), g.label(pair[1]))?;
        assignment.insert(edge, colors[i]);
    }
    EdgeColoring::new(ceil_log2(m + 1), assignment)
}

/// Vertex indices of a path graph in path order, starting from the
/// lowest-index endpoint.
fn path_vertex_order(g: &Graph) -> Vec<usize> {
    let start = (0..g.vertex_count())
        .find(|&v| g.degree(v) == 1)
        .expect("a path with an edge has an endpoint");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < g.vertex_count() {
        let next = g.neighbors(cur).find(|&w| w != prev).expect("path continues");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// A 2-coloring for a noncomplete graph without cut edges: one edge per
/// nontrivial block (chosen to form a matching) gets color 2, the rest
/// color 1. Every vertex pair then has a path using color 2 exactly once.
pub fn two_edge_connected_coloring(g: &Graph) -> Result<EdgeColoring> {
    if !is_two_edge_connected(g) {
        return Err(Error::Precondition("graph is not 2-edge-connected".to_string()));
    }
    if g.is_complete() {
        return Err(Error::Precondition(
            "complete graphs need only one color; this construction expects a noncomplete graph"
                .to_string(),
        ));
    }
    let matching = nontrivial_block_matching(g)?;
    let mut assignment: BTreeMap<Edge, usize> = g.edges().map(|e| (e, 1)).collect();
    for e in matching {
        assignment.insert(e, 2);
    }
    EdgeColoring::new(2, assignment)
}

/// Optimal coloring for graphs whose cut-edge components are all single
/// edges or degree-2 paths, under the default limits.
pub fn cut_path_coloring(g: &Graph) -> Result<EdgeColoring> {
    cut_path_coloring_with(g, &Limits::default())
}

/// Optimal coloring for graphs whose cut-edge components are all single
/// edges or degree-2 paths.
///
/// Every component is colored like a path, positions read along it; the
/// top color is `h`, the largest per-component color demand. When two or
/// more components demand `h`, one extra color `h + 1` marks a matching of
/// the nontrivial blocks; when exactly one does, the matching reuses `h`.
/// Small outputs (at most `verify_max_edges` edges) are re-verified pair by
/// pair before being returned.
pub fn cut_path_coloring_with(g: &Graph, limits: &Limits) -> Result<EdgeColoring> {
    let shapes = cut_component_shapes(g)?;
    if shapes.is_empty() {
        return Err(Error::Precondition("graph has no cut edge".to_string()));
    }
    if shapes.iter().any(|s| s.kind == ComponentKind::OtherTree) {
        return Err(Error::Precondition(
            "a cut component is neither a single edge nor a degree-2 path".to_string(),
        ));
    }
    let demand = |len: usize| ceil_log2(len + 1);
    let h = shapes.iter().map(|s| demand(s.edge_ids.len())).max().expect("components exist");
    // A single cut edge and nothing else: one color suffices.
    if g.vertex_count() == 2 {
        let mut assignment = BTreeMap::new();
        assignment.insert(g.edge_at(0), 1);
        return EdgeColoring::new(1, assignment);
    }
    let attainers = shapes.iter().filter(|s| demand(s.edge_ids.len()) == h).count();
    let target = if h == 1 {
        2
    } else if attainers == 1 {
        h
    } else {
        h + 1
    };
    let mut colors = vec![1usize; g.edge_count()];
    for shape in &shapes {
        let ruler = ruler_colors(shape.edge_ids.len());
        for (i, pair) in shape.vertex_ids.windows(2).enumerate() {
            let eid = g
                .adjacency(pair[0])
                .iter()
                .find(|&&(w, _)| w == pair[1])
                .map(|&(_, e)| e)
                .expect("consecutive path vertices are adjacent");
            colors[eid] = ruler[i];
        }
    }
    // Trees reaching this point are paths, already fully colored; everything
    // else has a nontrivial block to carry the top color.
    if shapes.iter().map(|s| s.edge_ids.len()).sum::<usize>() < g.edge_count() {
        for e in nontrivial_block_matching(g)? {
            let eid = g.edge_id(&e).expect("matching edge is in the graph");
            colors[eid] = target;
        }
    }
    let assignment: BTreeMap<Edge, usize> =
        colors.iter().enumerate().map(|(id, &c)| (g.edge_at(id), c)).collect();
    let coloring = EdgeColoring::new(target, assignment)?;
    if g.edge_count() <= limits.verify_max_edges {
        let verification = verify_cfc_with(g, &coloring, limits)?;
        if !verification.ok {
            return Err(Error::Internal(format!(
                "constructed coloring leaves pair {:?} without a conflict-free path",
                verification.failing_pair.expect("failed verification names a pair")
            )));
        }
    }
    Ok(coloring)
}

/// An optimal conflict-free coloring for `g` under the default limits.
pub fn construct_cfc_coloring(g: &Graph) -> Result<EdgeColoring> {
    construct_cfc_coloring_with(g, &Limits::default())
}

/// An optimal conflict-free coloring for `g`: the certificate of
/// [`crate::solver::cfc_exact_with`]. Fails with a scale error when only a
/// bound is known at these limits.
pub fn construct_cfc_coloring_with(g: &Graph, limits: &Limits) -> Result<EdgeColoring> {
    let result = crate::solver::cfc_exact_with(g, limits, crate::solver::SolveMode::Auto)?;
    result.certificate.ok_or(Error::ScaleLimit {
        what: "oracle_max_edges",
        limit: limits.oracle_max_edges,
        actual: g.edge_count(),
    })
}
