//! Connectivity structure: cut edges, blocks, and the forest they induce.
//!
//! The central object is [`CutStructure`]: the subgraph induced by the cut
//! edges splits into tree components, and each component is classified by
//! shape. A component that is a single edge, or a path all of whose interior
//! vertices have degree 2 in the whole graph, behaves rigidly under the
//! line-graph operation and under conflict-free colorings; everything else is
//! an `OtherTree` and is handled by exhaustive search.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::{ceil_log2, cfc_oracle_with, Limits, OracleMode};

/// Cut edges (bridges) in edge insertion order.
///
/// An edge is a cut edge iff removing it disconnects the graph. Requires a
/// connected input.
pub fn find_bridges(g: &Graph) -> Result<Vec<Edge>> {
    Ok(bridge_edge_ids(g)?.into_iter().map(|id| g.edge_at(id)).collect())
}

pub(crate) fn bridge_edge_ids(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut bridges = Vec::new();
    if n < 2 {
        return Ok(bridges);
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    // Iterative low-link DFS; frame = (vertex, incoming edge id, adjacency cursor).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    while let Some(frame) = stack.last_mut() {
        let v = frame.0;
        let parent_edge = frame.1;
        if let Some(&(w, eid)) = g.adjacency(v).get(frame.2) {
            frame.2 += 1;
            if eid == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, eid, 0));
            } else if disc[w] < disc[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(parent) = stack.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    bridges.push(parent_edge);
                }
            }
        }
    }
    bridges.sort_unstable();
    Ok(bridges)
}

/// A maximal subgraph without a cut vertex (a single edge when trivial).
#[derive(Clone, Debug, Serialize)]
pub struct Block {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub trivial: bool,
}

/// Blocks, cut vertices, and the bipartite block–cut tree connecting them.
#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<String>,
    /// `(block index, cut vertex)` incidences of the block–cut tree.
    pub tree: Vec<(usize, String)>,
}

/// Splits a connected graph on at least two vertices into its blocks.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let (block_ids, is_cut) = block_edge_ids(g)?;
    let blocks = block_ids
        .iter()
        .map(|ids| {
            let mut vertex_ids: Vec<usize> = Vec::new();
            for &eid in ids {
                let (u, v) = g.edge_vertex_ids(eid);
                for x in [u, v] {
                    if !vertex_ids.contains(&x) {
                        vertex_ids.push(x);
                    }
                }
            }
            vertex_ids.sort_unstable();
            Block {
                vertices: vertex_ids.iter().map(|&v| g.label(v).to_string()).collect(),
                edges: ids.iter().map(|&e| g.edge_at(e)).collect(),
                trivial: ids.len() == 1,
            }
        })
        .collect::<Vec<_>>();
    let cut_vertices: Vec<String> =
        (0..g.vertex_count()).filter(|&v| is_cut[v]).map(|v| g.label(v).to_string()).collect();
    let mut tree = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        for label in &block.vertices {
            if is_cut[g.vertex_index(label).expect("block vertex exists")] {
                tree.push((bi, label.clone()));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices, tree })
}

/// Blocks as edge-id sets plus the cut-vertex flags, via an iterative DFS
/// that stacks edges and closes a block whenever a subtree cannot reach above
/// its attachment point.
pub(crate) fn block_edge_ids(g: &Graph) -> Result<(Vec<Vec<usize>>, Vec<bool>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition(
            "block decomposition needs at least two vertices".to_string(),
        ));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // Frame = (vertex, incoming edge id, adjacency cursor, tree children).
    let mut stack: Vec<(usize, usize, usize, usize)> = vec![(0, usize::MAX, 0, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut root_children = 0usize;
    while let Some(frame) = stack.last_mut() {
        let v = frame.0;
        if let Some(&(w, eid)) = g.adjacency(v).get(frame.2) {
            frame.2 += 1;
            if eid == frame.1 {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push(eid);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frame.3 += 1;
                stack.push((w, eid, 0, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(eid);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            let (v, parent_edge, _, children) = stack.pop().expect("frame exists");
            if let Some(parent) = stack.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == parent_edge {
                            break;
                        }
                    }
                    block.reverse();
                    blocks.push(block);
                    if stack.len() >= 2 {
                        is_cut[p] = true;
                    }
                }
            } else {
                root_children = children;
            }
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }
    Ok((blocks, is_cut))
}

/// Connected, at least two vertices, and no cut edge. `K_2` does not qualify:
/// its only edge is a cut edge.
pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.vertex_count() >= 2
        && g.is_connected()
        && bridge_edge_ids(g).map(|b| b.is_empty()).unwrap_or(false)
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3
        && g.is_connected()
        && block_edge_ids(g).map(|(_, is_cut)| !is_cut.iter().any(|&c| c)).unwrap_or(false)
}

/// True iff no vertex has three pairwise nonadjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    for v in 0..g.vertex_count() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for i in 0..nbrs.len() {
            for j in (i + 1)..nbrs.len() {
                if g.has_edge_ids(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in (j + 1)..nbrs.len() {
                    if !g.has_edge_ids(nbrs[i], nbrs[k]) && !g.has_edge_ids(nbrs[j], nbrs[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Shape class of one component of the cut-edge subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    /// A single cut edge.
    #[serde(rename = "ORDER2")]
    Order2,
    /// A path of two or more cut edges whose interior vertices have degree 2
    /// in the whole graph.
    #[serde(rename = "CUT_PATH")]
    CutPath,
    /// Any other tree of cut edges.
    #[serde(rename = "OTHER_TREE")]
    OtherTree,
}

/// One component of the subgraph induced by the cut edges.
#[derive(Clone, Debug, Serialize)]
pub struct CutComponent {
    /// For path-shaped components the vertices are listed in path order;
    /// otherwise in discovery order.
    pub vertices: Vec<String>,
    pub kind: ComponentKind,
    /// Edge count.
    pub length: usize,
    /// Conflict-free connection number of the component as a standalone tree.
    pub cfc: usize,
}

/// The cut-edge subgraph, its components, and two summary values:
/// `p` is the longest length among `Order2`/`CutPath` components, and `h` is
/// the largest conflict-free connection number over all components.
#[derive(Clone, Debug, Serialize)]
pub struct CutStructure {
    pub bridges: Vec<Edge>,
    pub components: Vec<CutComponent>,
    pub p: usize,
    pub h: usize,
}

pub(crate) struct ShapedComponent {
    /// Path order when `is_path`, discovery order otherwise.
    pub vertex_ids: Vec<usize>,
    pub edge_ids: Vec<usize>,
    pub kind: ComponentKind,
    pub is_path: bool,
}

/// Components of the cut-edge subgraph with shape classification but without
/// the per-component connection numbers (no exhaustive search involved).
pub(crate) fn cut_component_shapes(g: &Graph) -> Result<Vec<ShapedComponent>> {
    let bridge_ids = bridge_edge_ids(g)?;
    // Adjacency restricted to cut edges.
    let mut badj: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for &eid in &bridge_ids {
        let (u, v) = g.edge_vertex_ids(eid);
        badj.entry(u).or_default().push((v, eid));
        badj.entry(v).or_default().push((u, eid));
    }
    let mut assigned: HashMap<usize, usize> = HashMap::new();
    let mut shapes: Vec<ShapedComponent> = Vec::new();
    for &eid in &bridge_ids {
        let (u, _) = g.edge_vertex_ids(eid);
        let start = u;
        if assigned.contains_key(&start) {
            continue;
        }
        // Collect the component by DFS over cut edges.
        let comp_index = shapes.len();
        let mut vertex_ids = vec![start];
        let mut edge_ids: Vec<usize> = Vec::new();
        assigned.insert(start, comp_index);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &(w, e) in badj.get(&v).into_iter().flatten() {
                if !edge_ids.contains(&e) {
                    edge_ids.push(e);
                }
                if let std::collections::hash_map::Entry::Vacant(slot) = assigned.entry(w) {
                    slot.insert(comp_index);
                    vertex_ids.push(w);
                    queue.push(w);
                }
            }
        }
        edge_ids.sort_unstable();
        let comp_degree = |v: usize| badj.get(&v).map(|a| a.len()).unwrap_or(0);
        let is_path = vertex_ids.iter().all(|&v| comp_degree(v) <= 2);
        if is_path {
            // Re-list vertices in path order, starting from the endpoint with
            // the smaller insertion index.
            let mut ends: Vec<usize> =
                vertex_ids.iter().copied().filter(|&v| comp_degree(v) == 1).collect();
            ends.sort_unstable();
            let start = ends[0];
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while order.len() < vertex_ids.len() {
                let next = badj[&cur]
                    .iter()
                    .map(|&(w, _)| w)
                    .find(|&w| w != prev)
                    .expect("path component continues");
                order.push(next);
                prev = cur;
                cur = next;
            }
            vertex_ids = order;
        }
        let kind = if edge_ids.len() == 1 {
            ComponentKind::Order2
        } else if is_path && vertex_ids[1..vertex_ids.len() - 1].iter().all(|&v| g.degree(v) == 2) {
            ComponentKind::CutPath
        } else {
            ComponentKind::OtherTree
        };
        shapes.push(ShapedComponent { vertex_ids, edge_ids, kind, is_path });
    }
    Ok(shapes)
}

pub(crate) fn component_graph(g: &Graph, shape: &ShapedComponent) -> Graph {
    let mut comp = Graph::new();
    for &v in &shape.vertex_ids {
        comp.add_vertex(g.label(v));
    }
    for &eid in &shape.edge_ids {
        let (u, v) = g.edge_vertex_ids(eid);
        comp.add_edge(g.label(u), g.label(v)).expect("component edge is loop-free");
    }
    comp
}

/// Classifies the components of the cut-edge subgraph under the default
/// limits. See [`classify_cut_components_with`].
pub fn classify_cut_components(g: &Graph) -> Result<CutStructure> {
    classify_cut_components_with(g, &Limits::default())
}

/// Classifies the components of the cut-edge subgraph and computes `p` and
/// `h`. Path-shaped components get their connection number from the closed
/// form for paths; other trees go through the exhaustive oracle, which is why
/// limits are needed. A tree component beyond the oracle limit yields
/// [`Error::ComponentUndecidable`].
pub fn classify_cut_components_with(g: &Graph, limits: &Limits) -> Result<CutStructure> {
    let bridge_ids = bridge_edge_ids(g)?;
    let shapes = cut_component_shapes(g)?;
    let mut components = Vec::new();
    for shape in &shapes {
        let length = shape.edge_ids.len();
        let cfc = if shape.is_path {
            ceil_log2(length + 1)
        } else {
            let comp = component_graph(g, shape);
            match cfc_oracle_with(&comp, limits, OracleMode::Pruned) {
                Ok(result) => result
                    .value
                    .exact()
                    .ok_or_else(|| Error::Internal("oracle returned a bound".to_string()))?,
                Err(Error::ScaleLimit { limit, actual, .. }) => {
                    return Err(Error::ComponentUndecidable {
                        vertices: shape
                            .vertex_ids
                            .iter()
                            .map(|&v| g.label(v).to_string())
                            .collect(),
                        edges: actual,
                        limit,
                    })
                }
                Err(e) => return Err(e),
            }
        };
        components.push(CutComponent {
            vertices: shape.vertex_ids.iter().map(|&v| g.label(v).to_string()).collect(),
            kind: shape.kind,
            length,
            cfc,
        });
    }
    let p = components
        .iter()
        .filter(|c| c.kind != ComponentKind::OtherTree)
        .map(|c| c.length)
        .max()
        .unwrap_or(0);
    let h = components.iter().map(|c| c.cfc).max().unwrap_or(0);
    Ok(CutStructure {
        bridges: bridge_ids.into_iter().map(|id| g.edge_at(id)).collect(),
        components,
        p,
        h,
    })
}

/// One edge per nontrivial block such that the chosen edges form a matching.
///
/// Blocks are visited in breadth-first order over the block–cut tree; within
/// a block, edges avoiding cut vertices are preferred, and the search
/// backtracks if a greedy choice paints itself into a corner.
pub fn nontrivial_block_matching(g: &Graph) -> Result<Vec<Edge>> {
    let (blocks, is_cut) = block_edge_ids(g)?;
    // Breadth-first order over the block–cut tree.
    let mut blocks_at: HashMap<usize, Vec<usize>> = HashMap::new();
    for (bi, ids) in blocks.iter().enumerate() {
        for &eid in ids {
            let (u, v) = g.edge_vertex_ids(eid);
            for x in [u, v] {
                if is_cut[x] {
                    let entry = blocks_at.entry(x).or_default();
                    if !entry.contains(&bi) {
                        entry.push(bi);
                    }
                }
            }
        }
    }
    let mut order = Vec::new();
    let mut seen = vec![false; blocks.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(bi) = queue.pop_front() {
        order.push(bi);
        let mut cuts: Vec<usize> = Vec::new();
        for &eid in &blocks[bi] {
            let (u, v) = g.edge_vertex_ids(eid);
            for x in [u, v] {
                if is_cut[x] && !cuts.contains(&x) {
                    cuts.push(x);
                }
            }
        }
        for x in cuts {
            for &nb in &blocks_at[&x] {
                if !seen[nb] {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
    let nontrivial: Vec<usize> = order.into_iter().filter(|&bi| blocks[bi].len() >= 2).collect();
    if nontrivial.is_empty() {
        return Err(Error::Precondition("graph has no nontrivial block".to_string()));
    }
    // Candidate edges per block, cheapest first: fewest cut-vertex endpoints,
    // then insertion order.
    let candidates: Vec<Vec<usize>> = nontrivial
        .iter()
        .map(|&bi| {
            let mut edges = blocks[bi].clone();
            edges.sort_by_key(|&eid| {
                let (u, v) = g.edge_vertex_ids(eid);
                (is_cut[u] as usize + is_cut[v] as usize, eid)
            });
            edges
        })
        .collect();
    let mut used = vec![false; g.vertex_count()];
    let mut chosen: Vec<usize> = Vec::new();
    if !pick_matching(g, &candidates, 0, &mut used, &mut chosen) {
        return Err(Error::Internal(
            "no matching with one edge per nontrivial block exists".to_string(),
        ));
    }
    Ok(chosen.into_iter().map(|eid| g.edge_at(eid)).collect())
}

fn pick_matching(
    g: &Graph,
    candidates: &[Vec<usize>],
    depth: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    if depth == candidates.len() {
        return true;
    }
    for &eid in &candidates[depth] {
        let (u, v) = g.edge_vertex_ids(eid);
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        chosen.push(eid);
        if pick_matching(g, candidates, depth + 1, used, chosen) {
            return true;
        }
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    false
}

/// A simple `u`–`v` path whose edge sequence includes `through`. Requires a
/// 2-connected graph, where such a path always exists.
pub fn path_through_edge(g: &Graph, u: &str, v: &str, through: &Edge) -> Result<Vec<String>> {
    if !is_two_connected(g) {
        return Err(Error::Precondition("graph is not 2-connected".to_string()));
    }
    let ui = g.vertex_index(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
    let vi = g.vertex_index(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
    if ui == vi {
        return Err(Error::Precondition("path endpoints must differ".to_string()));
    }
    let target_edge = g.edge_id(through).ok_or_else(|| {
        Error::Precondition(format!("edge {} is not in the graph", through.key()))
    })?;
    let mut frames: Vec<(usize, usize)> = vec![(ui, 0)];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[ui] = true;
    let mut edge_path: Vec<usize> = Vec::new();
    while let Some(frame) = frames.last_mut() {
        let at = frame.0;
        if let Some(&(w, eid)) = g.adjacency(at).get(frame.1) {
            frame.1 += 1;
            if on_path[w] {
                continue;
            }
            if w == vi {
                edge_path.push(eid);
                if edge_path.contains(&target_edge) {
                    let mut labels: Vec<String> =
                        frames.iter().map(|&(x, _)| g.label(x).to_string()).collect();
                    labels.push(g.label(vi).to_string());
                    return Ok(labels);
                }
                edge_path.pop();
            } else {
                on_path[w] = true;
                edge_path.push(eid);
                frames.push((w, 0));
            }
        } else {
            frames.pop();
            on_path[at] = false;
            if !edge_path.is_empty() {
                edge_path.pop();
            }
        }
    }
    Err(Error::Internal(
        "no path through the requested edge; this cannot happen in a 2-connected graph".to_string(),
    ))
}
