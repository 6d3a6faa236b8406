//! Line graphs with provenance-preserving labels.
//!
//! The line graph `L(G)` has one vertex per edge of `G`, two of them adjacent
//! iff the source edges share an endpoint. Vertex labels are the canonical
//! edge keys of the source graph, so labels stay meaningful (if long) across
//! repeated applications, and a provenance map records which source edge each
//! final vertex came from.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A line graph together with the edge of the source graph behind each vertex.
#[derive(Clone, Debug)]
pub struct LabeledLineGraph {
    pub graph: Graph,
    /// Vertex label of the result → edge of the graph it was taken from
    /// (the last iterate before the result). Empty when no application
    /// happened.
    pub provenance: BTreeMap<String, Edge>,
}

/// Builds `L(g)`. Vertices appear in the edge insertion order of `g`.
pub fn line_graph(g: &Graph) -> LabeledLineGraph {
    let mut result = Graph::new();
    let mut provenance = BTreeMap::new();
    for edge in g.edges() {
        result.add_vertex(edge.key());
        provenance.insert(edge.key(), edge);
    }
    for v in 0..g.vertex_count() {
        let mut incident: Vec<usize> = g.adjacency(v).iter().map(|&(_, eid)| eid).collect();
        incident.sort_unstable();
        for i in 0..incident.len() {
            for j in (i + 1)..incident.len() {
                let a = g.edge_at(incident[i]).key();
                let b = g.edge_at(incident[j]).key();
                result.add_edge(&a, &b).expect("distinct edges have distinct keys");
            }
        }
    }
    LabeledLineGraph { graph: result, provenance }
}

/// Edge count of `L(g)` without building it: the pairs of incident edges,
/// summed over vertices.
pub fn line_graph_edge_count(g: &Graph) -> u64 {
    (0..g.vertex_count())
        .map(|v| {
            let d = g.degree(v) as u64;
            d * (d.saturating_sub(1)) / 2
        })
        .sum()
}

/// Applies the line-graph operation `k` times, guarding each step with
/// `edge_cap`: if the next iterate would have more than `edge_cap` edges the
/// iteration stops with [`Error::EdgeCapExceeded`] before allocating it.
pub fn iterated_line_graph(g: &Graph, k: usize, edge_cap: usize) -> Result<LabeledLineGraph> {
    let mut current = LabeledLineGraph { graph: g.clone(), provenance: BTreeMap::new() };
    for step in 0..k {
        let would_have = line_graph_edge_count(&current.graph);
        if would_have > edge_cap as u64 {
            return Err(Error::EdgeCapExceeded {
                cap: edge_cap,
                iteration: step + 1,
                would_have: would_have as usize,
            });
        }
        current = line_graph(&current.graph);
    }
    Ok(current)
}

/// True iff the graph is a star (including a single edge) or a triangle —
/// exactly the connected graphs whose line graph is complete.
pub fn is_star_or_triangle(g: &Graph) -> bool {
    g.is_star() || (g.vertex_count() == 3 && g.edge_count() == 3)
}
