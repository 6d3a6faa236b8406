//! Connection numbers along the line-graph iteration, without materializing
//! the iterates.
//!
//! Key facts used here: a path loses one vertex per application; stars and
//! triangles map to complete graphs; complete and bridgeless noncomplete
//! graphs stay bridgeless and noncomplete (value 2) forever; and for every
//! other connected graph the cut components of `L(G)` are single edges and
//! degree-2 paths whose lengths shrink by exactly one per application, so
//! the whole trajectory follows from the multiset of those lengths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::line_graph::iterated_line_graph;
use crate::solver::exact::cfc_exact_with;
use crate::solver::{ceil_log2, CfcValue, Limits, Method, SolveMode};
use crate::structure::{cut_component_shapes, ComponentKind};

/// Connection number of the `k`-th line-graph iterate.
#[derive(Clone, Debug, Serialize)]
pub struct IteratedCfc {
    pub k: usize,
    pub value: CfcValue,
    pub method: Method,
}

/// The smallest iteration count at which the connection number equals 2
/// (`k0`, absent when the trajectory never passes through 2) and the
/// smallest at which it is at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K0Result {
    pub k0: Option<usize>,
    pub first_k_le_2: usize,
}

/// Trajectory family of a connected graph. Every connected graph lands in
/// exactly one arm, and each arm has a closed form for all iterates.
enum Family {
    /// At most one vertex; all iterates are empty.
    Degenerate,
    Complete(usize),
    Path(usize),
    /// At least three leaves (one or two leaves are a path).
    Star(usize),
    /// No cut edge and not complete.
    Bridgeless,
    /// Order at least 4, has a cut edge, neither path nor star.
    General,
}

fn family(g: &Graph) -> Family {
    let n = g.vertex_count();
    if n <= 1 {
        Family::Degenerate
    } else if g.is_complete() {
        Family::Complete(n)
    } else if g.is_path() {
        Family::Path(n)
    } else if g.is_star() {
        Family::Star(n - 1)
    } else if crate::structure::is_two_edge_connected(g) {
        Family::Bridgeless
    } else {
        Family::General
    }
}

/// Value and method tag of iterate `k >= 1`. `multiset` carries the cut-path
/// lengths of `L(g)` and is only consulted in the `General` arm.
fn family_value_at(fam: &Family, k: usize, multiset: Option<&[usize]>) -> (usize, Method) {
    debug_assert!(k >= 1);
    match fam {
        Family::Degenerate => (0, Method::PathFormula),
        Family::Complete(n) => match n {
            2 => (0, Method::PathFormula),
            3 => (1, Method::Complete),
            _ => (2, Method::TwoEdgeConnected),
        },
        Family::Path(n) => {
            if k < *n {
                (ceil_log2(n - k), Method::PathFormula)
            } else {
                (0, Method::PathFormula)
            }
        }
        Family::Star(leaves) => {
            if k == 1 || *leaves == 3 {
                (1, Method::Complete)
            } else {
                (2, Method::TwoEdgeConnected)
            }
        }
        Family::Bridgeless => (2, Method::TwoEdgeConnected),
        Family::General => {
            let ms = multiset.expect("general trajectories carry the length multiset");
            general_value_at(ms, k)
        }
    }
}

/// Iterate `k >= 1` of a general graph from the cut-path lengths of `L(g)`:
/// a length-`l` component survives while `l >= k` with `l - k + 1` edges
/// left, demanding `⌈log2(l - k + 2)⌉` colors. No survivors means the
/// iterate is bridgeless; top demand 1 means all survivors are single edges;
/// otherwise a unique top component keeps the demand, a tie costs one more.
fn general_value_at(multiset: &[usize], k: usize) -> (usize, Method) {
    let demands: Vec<usize> =
        multiset.iter().filter(|&&l| l >= k).map(|&l| ceil_log2(l - k + 2)).collect();
    match demands.iter().max() {
        None => (2, Method::TwoEdgeConnected),
        Some(&1) => (2, Method::Order2Components),
        Some(&h) => {
            if demands.iter().filter(|&&d| d == h).count() == 1 {
                (h, Method::CutPathUnique)
            } else {
                (h + 1, Method::CutPathMulti)
            }
        }
    }
}

/// Lengths of the cut-edge components of `L(g)`, which are always single
/// edges or degree-2 paths there.
pub(crate) fn cut_path_lengths_of_line_graph(g: &Graph, limits: &Limits) -> Result<Vec<usize>> {
    let l = iterated_line_graph(g, 1, limits.edge_cap)?;
    let shapes = cut_component_shapes(&l.graph)?;
    if shapes.iter().any(|s| s.kind == ComponentKind::OtherTree) {
        return Err(Error::Internal(
            "a line graph grew a cut component that is not a single edge or a degree-2 path"
                .to_string(),
        ));
    }
    Ok(shapes.iter().map(|s| s.edge_ids.len()).collect())
}

/// Connection numbers of `g, L(g), ..., L^k_max(g)` under the default limits.
pub fn cfc_iterated(g: &Graph, k_max: usize) -> Result<Vec<IteratedCfc>> {
    cfc_iterated_with(g, k_max, &Limits::default())
}

/// Connection numbers of `g, L(g), ..., L^k_max(g)`.
///
/// Entry 0 comes from the exact solver (and may be a bound at scale); later
/// entries use the per-family closed forms and are always exact. Only `L(g)`
/// itself is ever materialized, and only for graphs outside the fully
/// formulaic families.
pub fn cfc_iterated_with(g: &Graph, k_max: usize, limits: &Limits) -> Result<Vec<IteratedCfc>> {
    let base = cfc_exact_with(g, limits, SolveMode::Auto)?;
    let mut out = vec![IteratedCfc { k: 0, value: base.value, method: base.method }];
    if k_max == 0 {
        return Ok(out);
    }
    let fam = family(g);
    let multiset = match fam {
        Family::General => Some(cut_path_lengths_of_line_graph(g, limits)?),
        _ => None,
    };
    for k in 1..=k_max {
        let (v, method) = family_value_at(&fam, k, multiset.as_deref());
        out.push(IteratedCfc { k, value: CfcValue::Exact(v), method });
    }
    Ok(out)
}

/// Stabilization indices under the default limits.
pub fn k0(g: &Graph) -> Result<K0Result> {
    k0_with(g, &Limits::default())
}

/// Smallest `k` with value exactly 2 (when it exists) and smallest `k` with
/// value at most 2, computed from the per-family closed forms.
pub fn k0_with(g: &Graph, limits: &Limits) -> Result<K0Result> {
    let base = cfc_exact_with(g, limits, SolveMode::Auto)?;
    // A bound straddling 2 cannot decide whether the trajectory starts there.
    if matches!(base.value, CfcValue::Bound { lo, .. } if lo <= 2) {
        return Err(Error::ScaleLimit {
            what: "oracle_max_edges",
            limit: limits.oracle_max_edges,
            actual: g.edge_count(),
        });
    }
    let fam = family(g);
    let multiset = match fam {
        Family::General if base.value != CfcValue::Exact(2) => {
            Some(cut_path_lengths_of_line_graph(g, limits)?)
        }
        _ => None,
    };
    let k0 = match &fam {
        Family::Degenerate => None,
        Family::Complete(n) => {
            if *n <= 3 {
                None
            } else {
                Some(1)
            }
        }
        Family::Path(n) => Some((*n).max(4) - 4),
        Family::Star(leaves) => {
            if *leaves == 3 {
                None
            } else {
                Some(2)
            }
        }
        Family::Bridgeless => Some(0),
        Family::General => {
            if base.value == CfcValue::Exact(2) {
                Some(0)
            } else {
                let ms = multiset.as_deref().expect("multiset computed for general graphs");
                Some(general_k0(ms))
            }
        }
    };
    let first_k_le_2 = if base.value.upper() <= 2 {
        0
    } else {
        let bound = g.vertex_count() + g.edge_count() + 8;
        (1..=bound)
            .find(|&k| family_value_at(&fam, k, multiset.as_deref()).0 <= 2)
            .ok_or_else(|| Error::Internal("iterated values never reached 2".to_string()))?
    };
    Ok(K0Result { k0, first_k_le_2 })
}

/// First iterate with value exactly 2 for a general graph whose starting
/// value exceeds 2, read off the cut-path lengths `M` of `L(g)` with longest
/// length `p`:
/// all lengths at most 1 or a unique demand-2 component give 2 at the first
/// iterate; a tie among longest components gives `p`; a unique longest with
/// a length `p - 1` companion gives `p - 1`; otherwise `p - 2`.
fn general_k0(multiset: &[usize]) -> usize {
    let p = multiset.iter().copied().max().unwrap_or(0);
    if p <= 1 {
        return 1;
    }
    let demands: Vec<usize> = multiset.iter().map(|&l| ceil_log2(l + 1)).collect();
    let h = *demands.iter().max().expect("nonempty multiset");
    if h == 2 && demands.iter().filter(|&&d| d == 2).count() == 1 {
        return 1;
    }
    if multiset.iter().filter(|&&l| l == p).count() >= 2 {
        p
    } else if multiset.contains(&(p - 1)) {
        p - 1
    } else {
        p - 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn values(g: &Graph, k_max: usize) -> Vec<usize> {
        cfc_iterated(g, k_max)
            .unwrap()
            .iter()
            .map(|e| e.value.exact().expect("exact trajectory"))
            .collect()
    }

    #[test]
    fn path_trajectories_count_down_by_halving() {
        assert_eq!(values(&generators::path_graph(9), 8), [4, 3, 3, 3, 3, 2, 2, 1, 0]);
        assert_eq!(values(&generators::path_graph(2), 2), [1, 0, 0]);
    }

    #[test]
    fn complete_trajectories() {
        assert_eq!(values(&generators::complete_graph(3), 4), [1, 1, 1, 1, 1]);
        assert_eq!(values(&generators::complete_graph(4), 4), [1, 2, 2, 2, 2]);
        assert_eq!(values(&generators::complete_graph(6), 3), [1, 2, 2, 2]);
    }

    #[test]
    fn star_trajectories_dip_then_settle() {
        assert_eq!(values(&generators::star_graph(3), 3), [3, 1, 1, 1]);
        assert_eq!(values(&generators::star_graph(4), 4), [4, 1, 2, 2, 2]);
        assert_eq!(values(&generators::star_graph(6), 4), [6, 1, 2, 2, 2]);
    }

    #[test]
    fn bridgeless_trajectories_are_constant() {
        assert_eq!(values(&generators::cycle_graph(5), 3), [2, 2, 2, 2]);
        assert_eq!(values(&generators::petersen(), 3), [2, 2, 2, 2]);
    }

    #[test]
    fn general_trajectory_tracks_the_shrinking_tail() {
        // A 4-clique with a pendant path of four edges: the line graph keeps
        // a three-edge tail, which shrinks away over three iterates.
        let g = generators::complete_with_pendant_path(4, 4);
        assert_eq!(values(&g, 5), [3, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn methods_along_a_general_trajectory() {
        let g = generators::complete_with_pendant_path(4, 6);
        let entries = cfc_iterated(&g, 6).unwrap();
        let methods: Vec<Method> = entries.iter().map(|e| e.method).collect();
        assert_eq!(
            methods,
            [
                Method::CutPathUnique,
                Method::CutPathUnique,
                Method::CutPathUnique,
                Method::CutPathUnique,
                Method::CutPathUnique,
                Method::Order2Components,
                Method::TwoEdgeConnected,
            ]
        );
        let vals: Vec<usize> = entries.iter().map(|e| e.value.exact().unwrap()).collect();
        assert_eq!(vals, [3, 3, 3, 2, 2, 2, 2]);
    }

    #[test]
    fn k0_of_paths() {
        assert_eq!(k0(&generators::path_graph(2)).unwrap(), K0Result { k0: None, first_k_le_2: 0 });
        for (n, expect) in [(3, 0), (4, 0), (5, 1), (6, 2), (7, 3), (8, 4)] {
            let r = k0(&generators::path_graph(n)).unwrap();
            assert_eq!(r.k0, Some(expect), "path on {n} vertices");
        }
    }

    #[test]
    fn k0_of_complete_graphs_and_stars() {
        assert_eq!(k0(&generators::complete_graph(3)).unwrap().k0, None);
        for n in 4..=6 {
            let r = k0(&generators::complete_graph(n)).unwrap();
            assert_eq!((r.k0, r.first_k_le_2), (Some(1), 0), "complete graph on {n}");
        }
        assert_eq!(k0(&generators::star_graph(3)).unwrap(), K0Result { k0: None, first_k_le_2: 1 });
        for leaves in 4..=7 {
            let r = k0(&generators::star_graph(leaves)).unwrap();
            assert_eq!((r.k0, r.first_k_le_2), (Some(2), 1), "star with {leaves} leaves");
        }
    }

    #[test]
    fn k0_of_bridgeless_graphs_is_zero() {
        assert_eq!(k0(&generators::petersen()).unwrap(), K0Result { k0: Some(0), first_k_le_2: 0 });
        assert_eq!(k0(&generators::bowtie()).unwrap().k0, Some(0));
    }

    #[test]
    fn k0_tail_branches() {
        // Unique longest length 5, no length 4 alongside: two below.
        let g = generators::complete_with_pendant_path(4, 6);
        assert_eq!(k0(&g).unwrap().k0, Some(3));
        // Lengths {4, 3}: unique longest with its predecessor present.
        let mut g = generators::complete_with_pendant_path(4, 5);
        let mut prev = "2".to_string();
        for s in 1..=4 {
            let next = format!("q{s}");
            g.add_edge(&prev, &next).unwrap();
            prev = next;
        }
        assert_eq!(k0(&g).unwrap().k0, Some(3));
        // Lengths {3, 3}: a tie among the longest.
        let mut g = generators::complete_with_pendant_path(4, 4);
        let mut prev = "2".to_string();
        for s in 1..=4 {
            let next = format!("q{s}");
            g.add_edge(&prev, &next).unwrap();
            prev = next;
        }
        assert_eq!(k0(&g).unwrap().k0, Some(3));
        // A single length-3 tail: unique demand-2 component.
        let g = generators::complete_with_pendant_path(4, 4);
        assert_eq!(k0(&g).unwrap(), K0Result { k0: Some(1), first_k_le_2: 1 });
    }

    #[test]
    fn k0_matches_the_trajectory() {
        let fixtures = [
            generators::path_graph(7),
            generators::star_graph(5),
            generators::complete_graph(5),
            generators::paw(),
            generators::triangle_chain(3),
            generators::complete_with_pendant_path(4, 6),
            generators::spider(3, 2),
        ];
        for g in fixtures {
            let r = k0(&g).unwrap();
            let trail = values(&g, 12);
            assert_eq!(
                r.k0,
                trail.iter().position(|&v| v == 2),
                "first value-2 index for {}",
                g.render_edge_list()
            );
            assert_eq!(
                r.first_k_le_2,
                trail.iter().position(|&v| v <= 2).expect("trajectory reaches 2"),
                "first value<=2 index for {}",
                g.render_edge_list()
            );
        }
    }

    #[test]
    fn degenerate_graphs() {
        let mut g = Graph::new();
        g.add_vertex("v");
        assert_eq!(k0(&g).unwrap(), K0Result { k0: None, first_k_le_2: 0 });
        assert_eq!(values(&g, 2), [0, 0, 0]);
    }
}
