//! Shared helpers for the integration tests.
//!
//! The centerpiece is an exhaustive catalogue of every connected graph on at
//! most six vertices, one representative per isomorphism class, produced by
//! enumerating edge subsets as bitmasks and keeping the lexicographically
//! smallest mask over all vertex permutations.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use cfc::Graph;

/// Isomorphism classes of connected graphs on 1..=6 vertices.
pub const CLASS_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];

/// All unordered pairs over `0..n` in lexicographic order; bit `b` of an edge
/// mask stands for `pairs[b]`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// All permutations of `0..n` (iterative Heap's algorithm).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![items.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn is_connected_mask(n: usize, mask: u32, pairs: &[(usize, usize)]) -> bool {
    let mut adj = vec![0u32; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask & (1 << b) != 0 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let all = (1u32 << n) - 1;
    let mut reach = 1u32;
    loop {
        let mut next = reach;
        for (v, nbrs) in adj.iter().enumerate() {
            if reach & (1 << v) != 0 {
                next |= nbrs;
            }
        }
        if next == reach {
            return reach == all;
        }
        reach = next;
    }
}

/// One connected representative per isomorphism class on exactly `n` vertices,
/// each with vertex labels `"1"..="n"` and edges in lexicographic pair order.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "catalogue covers 1..=6 vertices");
    let pairs = pairs(n);
    // Per-permutation bit remap tables: applying a permutation to a mask is
    // then one table lookup per set bit.
    let bit_index = {
        let mut t = [[0usize; 6]; 6];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            t[i][j] = b;
            t[j][i] = b;
        }
        t
    };
    let remaps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| bit_index[p[i]][p[j]]).collect())
        .collect();

    let mut canon: HashSet<u32> = HashSet::new();
    for mask in 0..(1u32 << pairs.len()) {
        if !is_connected_mask(n, mask, &pairs) {
            continue;
        }
        let mut best = u32::MAX;
        for remap in &remaps {
            let mut image = 0u32;
            let mut rest = mask;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << remap[b];
            }
            best = best.min(image);
        }
        canon.insert(best);
    }
    assert_eq!(canon.len(), CLASS_COUNTS[n - 1], "class count for order {n}");

    let mut masks: Vec<u32> = canon.into_iter().collect();
    masks.sort_unstable();
    masks
        .into_iter()
        .map(|mask| {
            let mut g = Graph::new();
            for v in 1..=n {
                g.add_vertex(v.to_string());
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    g.add_edge((i + 1).to_string(), (j + 1).to_string())
                        .expect("endpoints are distinct known vertices");
                }
            }
            g
        })
        .collect()
}

/// Every connected graph on at most six vertices, up to isomorphism
/// (143 graphs), built once and shared.
pub fn universe() -> &'static [Graph] {
    static UNIVERSE: OnceLock<Vec<Graph>> = OnceLock::new();
    UNIVERSE.get_or_init(|| (1..=6).flat_map(connected_classes).collect())
}

/// Ceiling of log2, the closed form used by path-shaped graphs.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}
