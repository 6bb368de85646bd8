//! Generators for the graph families used as patterns, witnesses and corpora.
//!
//! Half graphs and threshold graphs use the labelling `a_i = i - 1` and
//! `b_j = k + j - 1` for `1 <= i, j <= k`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BipartiteGraph, Graph};
use crate::bitset::Bitset;
use crate::error::{Error, Result};

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

/// Path on `t` vertices `0 - 1 - ... - (t-1)`.
pub fn path(t: usize) -> Result<Graph> {
    positive("t", t)?;
    let mut g = Graph::new(t);
    for v in 1..t {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_{l,r}` with left side `0..l`.
pub fn complete_bipartite(l: usize, r: usize) -> BipartiteGraph {
    let edges: Vec<_> = (0..l).flat_map(|a| (0..r).map(move |b| (a, b))).collect();
    BipartiteGraph::from_sides(l, r, &edges).expect("valid sides")
}

/// Perfect matching on `2m` vertices: `2i ~ 2i+1`.
pub fn matching(m: usize) -> Graph {
    let mut g = Graph::new(2 * m);
    for i in 0..m {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Half graph `H_k`: edges `a_i b_j` for `i <= j`; left side is the `a`'s.
pub fn half_graph(k: usize) -> Result<BipartiteGraph> {
    positive("k", k)?;
    let edges: Vec<_> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    BipartiteGraph::from_sides(k, k, &edges)
}

/// Universal threshold graph `R_k`: `H_k` plus a clique on the `a`'s.
pub fn universal_threshold(k: usize) -> Result<Graph> {
    let mut g = half_graph(k)?.into_graph();
    for i in 0..k {
        for j in i + 1..k {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// `P_t` with its (unique up to swapping) bipartition, even positions on the left.
pub fn bipartite_path(t: usize) -> Result<BipartiteGraph> {
    let g = path(t)?;
    let left = Bitset::from_iter(t, (0..t).step_by(2));
    BipartiteGraph::new(g, left)
}

/// The bipartite complement of `P_t` with the bipartition of [`bipartite_path`].
pub fn bipartite_path_complement(t: usize) -> Result<BipartiteGraph> {
    Ok(bipartite_path(t)?.bipartite_complement())
}

/// Erdős–Rényi `G(n, p)`, deterministic per seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_graph_with(&mut rng, n, p))
}

pub fn random_graph_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random bipartite graph with sides `0..l` and `l..l+r`.
pub fn random_bipartite(l: usize, r: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_bipartite_with(&mut rng, l, r, p))
}

pub fn random_bipartite_with<R: Rng>(rng: &mut R, l: usize, r: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for a in 0..l {
        for b in 0..r {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    BipartiteGraph::from_sides(l, r, &edges).expect("valid sides")
}

/// Random connected graph: a random spanning tree plus `G(n, p)` edges.
pub fn random_connected_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_graph_with(rng, n, p);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    g
}

/// Random connected bipartite graph with sides `l, r >= 1`.
pub fn random_connected_bipartite_with<R: Rng>(
    rng: &mut R,
    l: usize,
    r: usize,
    p: f64,
) -> BipartiteGraph {
    let b = random_bipartite_with(rng, l, r, p);
    let mut g = b.into_graph();
    let mut placed_left = vec![0];
    let mut placed_right = vec![l];
    g.add_edge(0, l);
    let mut rest: Vec<usize> = (1..l).chain(l + 1..l + r).collect();
    rest.shuffle(rng);
    for v in rest {
        if v < l {
            g.add_edge(v, *placed_right.choose(rng).expect("nonempty"));
            placed_left.push(v);
        } else {
            g.add_edge(v, *placed_left.choose(rng).expect("nonempty"));
            placed_right.push(v);
        }
    }
    BipartiteGraph::new(g, Bitset::from_iter(l + r, 0..l)).expect("edges cross sides")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let h1 = half_graph(1).unwrap();
        assert_eq!(h1.graph().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let r2 = universal_threshold(2).unwrap();
        // a1=0, a2=1, b1=2, b2=3
        assert_eq!(
            r2.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (1, 3)]
        );
        assert_eq!(path(4).unwrap().edge_count(), 3);
        assert!(path(0).is_err());
        assert!(half_graph(0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(
            random_graph(12, 0.4, 3).unwrap(),
            random_graph(12, 0.4, 3).unwrap()
        );
    }

    #[test]
    fn random_connected_bipartite_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let l = rng.gen_range(1..8);
            let r = rng.gen_range(1..8);
            let b = random_connected_bipartite_with(&mut rng, l, r, 0.2);
            assert_eq!(b.graph().connected_components().len(), 1);
        }
    }
}
