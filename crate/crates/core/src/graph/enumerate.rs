//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Canonical forms use colour refinement followed by individualisation of
//! the first smallest non-singleton cell, keeping the lexicographically
//! smallest adjacency code over all leaves of the search tree.

use std::collections::HashSet;

use super::{BipartiteGraph, Graph};

/// Upper-triangle adjacency code of `g` under the vertex order `order`.
fn code(g: &Graph, order: &[usize]) -> u128 {
    let mut c = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            c = (c << 1) | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    c
}

/// Refine an ordered partition until it is equitable. Cells are split by the
/// vector of neighbour counts into every cell; the split order only depends on
/// those counts, so the result is isomorphism-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0usize; g.n()];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells.len()];
                    for w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let cells = refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    match target {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let c = code(g, &order);
            if best.map_or(true, |b| c < b) {
                *best = Some(c);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells[..i].to_vec();
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(g, next, best);
            }
        }
    }
}

/// Canonical code: equal for two graphs on `n <= 16` vertices iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u128 {
    assert!(g.n() <= 16, "canonical codes support at most 16 vertices");
    if g.n() == 0 {
        return 0;
    }
    let mut best = None;
    search(g, vec![g.vertices().collect()], &mut best);
    best.expect("at least one leaf")
}

fn extend(g: &Graph, mask: u32) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for u in 0..n {
        if mask >> u & 1 == 1 {
            h.add_edge(u, n);
        }
    }
    h
}

/// One representative per isomorphism class of graphs on exactly `n` vertices.
/// Practical for `n <= 8`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0)];
    for m in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0..(1u32 << m) {
                let h = extend(g, mask);
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected representatives on exactly `n` vertices.
pub fn nonisomorphic_connected_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(|g| g.connected_components().len() == 1)
        .collect()
}

/// Every labelled bipartite graph with sides `0..l` and `l..l+r`.
pub fn labelled_bipartite_graphs(l: usize, r: usize) -> impl Iterator<Item = BipartiteGraph> {
    let cells = l * r;
    assert!(cells < 32, "too many cross pairs to enumerate");
    (0u32..(1 << cells)).map(move |mask| {
        let edges: Vec<_> = (0..cells)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i / r, i % r))
            .collect();
        BipartiteGraph::from_sides(l, r, &edges).expect("valid sides")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{cycle, path};

    #[test]
    fn known_counts() {
        // OEIS A000088 and A001349
        let counts: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| nonisomorphic_connected_graphs(n).len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let p = path(6).unwrap();
        let relabelled = p.induced(&[3, 0, 5, 1, 4, 2]);
        assert_eq!(canonical_code(&p), canonical_code(&relabelled));
        assert_ne!(canonical_code(&p), canonical_code(&cycle(6).unwrap()));
    }
}
