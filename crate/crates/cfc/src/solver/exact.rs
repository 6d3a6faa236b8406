//! The exact solver: closed forms where the structure allows them, the
//! exhaustive search where it does not, and an honest two-value bound when
//! the graph is too large for the search.

use std::collections::BTreeMap;

use crate::coloring::{
    cut_path_coloring_with, ruler_path_coloring, two_edge_connected_coloring, EdgeColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::oracle::cfc_oracle_with;
use crate::solver::{ceil_log2, CfcResult, CfcValue, Limits, Method, OracleMode, SolveMode};
use crate::structure::{
    classify_cut_components_with, cut_component_shapes, is_two_edge_connected, ComponentKind,
};

/// Exact connection number under the default limits.
pub fn cfc_exact(g: &Graph) -> Result<CfcResult> {
    cfc_exact_with(g, &Limits::default(), SolveMode::Auto)
}

/// Exact connection number of a connected graph.
///
/// Dispatch order: trivial orders, complete graphs, paths, stars, graphs
/// without cut edges, graphs whose cut components are single edges and
/// degree-2 paths — all closed forms with constructive certificates — then
/// the exhaustive search, and finally the cut-structure bound `h..h+1` when
/// the search is out of reach.
pub fn cfc_exact_with(g: &Graph, limits: &Limits, mode: SolveMode) -> Result<CfcResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if mode == SolveMode::OracleOnly {
        return cfc_oracle_with(g, limits, OracleMode::Pruned);
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(exact(0, Method::PathFormula, EdgeColoring::empty()));
    }
    if g.is_complete() {
        let all_one: BTreeMap<Edge, usize> = g.edges().map(|e| (e, 1)).collect();
        return Ok(exact(1, Method::Complete, EdgeColoring::new(1, all_one)?));
    }
    if g.is_path() {
        return Ok(exact(ceil_log2(n), Method::PathFormula, ruler_path_coloring(g)?));
    }
    if g.is_star() {
        let rainbow: BTreeMap<Edge, usize> =
            g.edges().enumerate().map(|(i, e)| (e, i + 1)).collect();
        return Ok(exact(n - 1, Method::StarFormula, EdgeColoring::new(n - 1, rainbow)?));
    }
    if is_two_edge_connected(g) {
        return Ok(exact(2, Method::TwoEdgeConnected, two_edge_connected_coloring(g)?));
    }
    // Connected, order >= 2, not complete, not 2-edge-connected: cut edges
    // exist from here on.
    let shapes = cut_component_shapes(g)?;
    debug_assert!(!shapes.is_empty());
    if shapes.iter().all(|s| s.kind != ComponentKind::OtherTree) {
        let demand = |len: usize| ceil_log2(len + 1);
        let h = shapes.iter().map(|s| demand(s.edge_ids.len())).max().expect("components exist");
        let (value, method) = if h == 1 {
            (2, Method::Order2Components)
        } else {
            let attainers = shapes.iter().filter(|s| demand(s.edge_ids.len()) == h).count();
            if attainers == 1 {
                (h, Method::CutPathUnique)
            } else {
                (h + 1, Method::CutPathMulti)
            }
        };
        return match cut_path_coloring_with(g, limits) {
            Ok(cert) => Ok(exact(value, method, cert)),
            // The construction self-checks on small graphs; a failure there
            // is a bug, so fall back to the search rather than answer wrong.
            Err(Error::Internal(_)) if g.edge_count() <= limits.oracle_max_edges => {
                cfc_oracle_with(g, limits, OracleMode::Pruned)
            }
            Err(e) => Err(e),
        };
    }
    if mode == SolveMode::FormulaOnly {
        return Err(Error::NoFormulaApplies);
    }
    if g.edge_count() <= limits.oracle_max_edges {
        return cfc_oracle_with(g, limits, OracleMode::Pruned);
    }
    let structure = classify_cut_components_with(g, limits)?;
    Ok(CfcResult {
        value: CfcValue::Bound { lo: structure.h, hi: structure.h + 1 },
        method: Method::HBound,
        certificate: None,
    })
}

fn exact(value: usize, method: Method, certificate: EdgeColoring) -> CfcResult {
    CfcResult { value: CfcValue::Exact(value), method, certificate: Some(certificate) }
}
