//! Constructors for the named graph families used in tests and the CLI demos.

use crate::graph::Graph;

/// Path on `n` vertices labelled `1..=n`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(i.to_string());
    }
    for i in 1..n {
        g.add_edge(i.to_string(), (i + 1).to_string()).expect("path edge");
    }
    g
}

/// Cycle on `n >= 3` vertices labelled `1..=n`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut g = path_graph(n);
    g.add_edge(n.to_string(), "1").expect("closing edge");
    g
}

/// Complete graph on `n` vertices labelled `1..=n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(i.to_string());
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            g.add_edge(i.to_string(), j.to_string()).expect("clique edge");
        }
    }
    g
}

/// Star with center `c` and `leaves >= 1` leaves labelled `1..=leaves`
/// (order `leaves + 1`).
pub fn star_graph(leaves: usize) -> Graph {
    assert!(leaves >= 1, "a star needs at least one leaf");
    let mut g = Graph::new();
    g.add_vertex("c");
    for i in 1..=leaves {
        g.add_edge("c", i.to_string()).expect("spoke");
    }
    g
}

/// Triangle `a, b, c` with a pendant edge `c - d`.
pub fn paw() -> Graph {
    Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]).expect("paw edges")
}

/// Two triangles sharing the single vertex `c`.
pub fn bowtie() -> Graph {
    Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c")])
        .expect("bowtie edges")
}

/// `t >= 1` triangles in a row, consecutive triangles joined by a path of
/// three edges whose interior vertices have degree 2.
pub fn triangle_chain(t: usize) -> Graph {
    assert!(t >= 1, "the chain needs at least one triangle");
    let mut g = Graph::new();
    for i in 1..=t {
        let (a, b, c) = (format!("t{i}a"), format!("t{i}b"), format!("t{i}c"));
        g.add_edge(&a, &b).expect("triangle edge");
        g.add_edge(&b, &c).expect("triangle edge");
        g.add_edge(&c, &a).expect("triangle edge");
        if i < t {
            let (m1, m2) = (format!("m{i}x"), format!("m{i}y"));
            g.add_edge(&c, &m1).expect("connector edge");
            g.add_edge(&m1, &m2).expect("connector edge");
            g.add_edge(&m2, format!("t{}a", i + 1)).expect("connector edge");
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new();
    for i in 1..=5 {
        g.add_edge(format!("o{i}"), format!("o{}", i % 5 + 1)).expect("outer edge");
    }
    for i in 1..=5 {
        g.add_edge(format!("i{i}"), format!("i{}", (i + 1) % 5 + 1)).expect("inner edge");
    }
    for i in 1..=5 {
        g.add_edge(format!("o{i}"), format!("i{i}")).expect("spoke");
    }
    g
}

/// `legs >= 3` paths of `len >= 1` edges each, glued at a common center `c`.
pub fn spider(legs: usize, len: usize) -> Graph {
    assert!(legs >= 3, "a spider needs at least three legs");
    assert!(len >= 1, "legs need at least one edge");
    let mut g = Graph::new();
    g.add_vertex("c");
    for l in 1..=legs {
        let mut prev = "c".to_string();
        for s in 1..=len {
            let next = format!("l{l}v{s}");
            g.add_edge(&prev, &next).expect("leg edge");
            prev = next;
        }
    }
    g
}

/// Complete graph on `n >= 3` vertices with a pendant path of `tail >= 1`
/// edges attached to vertex `1`.
pub fn complete_with_pendant_path(n: usize, tail: usize) -> Graph {
    assert!(n >= 3 && tail >= 1);
    let mut g = complete_graph(n);
    let mut prev = "1".to_string();
    for s in 1..=tail {
        let next = format!("p{s}");
        g.add_edge(&prev, &next).expect("tail edge");
        prev = next;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_counts() {
        assert!(path_graph(7).is_path());
        assert_eq!(path_graph(7).edge_count(), 6);
        assert!(star_graph(4).is_star());
        assert_eq!(star_graph(4).vertex_count(), 5);
        assert!(complete_graph(5).is_complete());
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(cycle_graph(6).edge_count(), 6);
        assert_eq!(paw().vertex_count(), 4);
        assert_eq!(bowtie().edge_count(), 6);
    }

    #[test]
    fn triangle_chain_counts() {
        let g = triangle_chain(1);
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        let g = triangle_chain(3);
        // 9 triangle vertices + 2 connectors * 2 interior vertices.
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 15));
        assert!(g.is_connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn spider_and_pendant_clique() {
        let g = spider(3, 2);
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 6));
        assert!(g.is_connected() && !g.is_path() && !g.is_star());
        let g = complete_with_pendant_path(4, 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 9));
        assert!(g.is_connected());
    }
}
