//! Random corpora by rejection sampling from mixtures of generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::generate::{
    bipartite_path, bipartite_path_complement, half_graph, path, random_bipartite_with, random_graph_with,
    universal_threshold,
};
use crate::graph::{BipartiteGraph, Graph};
use crate::patterns::{find_in_bipartite, find_induced, find_semi_induced};
use crate::tree_model::{bijoin_rule, random_tree_model_with, Rule};

/// Forbidden patterns for a corpus.
#[derive(Clone, Debug, Default)]
pub struct Exclusions {
    pub induced: Vec<Graph>,
    pub semi_induced: Vec<BipartiteGraph>,
    /// Side-respecting induced patterns, for bipartite hosts.
    pub bipartite: Vec<BipartiteGraph>,
}

impl Exclusions {
    /// Induced `P_t`, its complement and `R_k`.
    pub fn induced_class(t: usize, k: usize) -> Result<Self> {
        let p = path(t)?;
        Ok(Self {
            induced: vec![p.complement(), p, universal_threshold(k)?],
            ..Self::default()
        })
    }

    /// Semi-induced bipartite `P_t`, its bipartite complement and `H_k`.
    pub fn semi_induced_class(t: usize, k: usize) -> Result<Self> {
        Ok(Self {
            semi_induced: vec![bipartite_path(t)?, bipartite_path_complement(t)?, half_graph(k)?],
            ..Self::default()
        })
    }

    /// Bipartite `P_t`, its bipartite complement and `H_k` inside bipartite hosts.
    pub fn bipartite_class(t: usize, k: usize) -> Result<Self> {
        Ok(Self {
            bipartite: vec![bipartite_path(t)?, bipartite_path_complement(t)?, half_graph(k)?],
            ..Self::default()
        })
    }

    pub fn admits(&self, g: &Graph) -> Result<bool> {
        for p in &self.induced {
            if find_induced(g, p)?.is_some() {
                return Ok(false);
            }
        }
        for p in &self.semi_induced {
            if find_semi_induced(g, p)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn admits_bipartite(&self, b: &BipartiteGraph) -> Result<bool> {
        for p in &self.bipartite {
            if find_in_bipartite(b, p)?.is_some() {
                return Ok(false);
            }
        }
        self.admits(b.graph())
    }
}

/// Draw from one of: `G(n, p)`, an evaluated random tree model, a disjoint
/// union of small random pieces, or the complement of such a union.
pub fn propose_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    match rng.gen_range(0..4) {
        0 => {
            let p = rng.gen_range(0.05..0.95);
            random_graph_with(rng, n, p)
        }
        1 => {
            let k = rng.gen_range(1..=3);
            let h = rng.gen_range(1..=3);
            random_tree_model_with(rng, k, h, n).evaluate().expect("leaves are 0..n")
        }
        2 => small_pieces(rng, n),
        _ => small_pieces(rng, n).complement(),
    }
}

fn small_pieces<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=rest.len().min(5));
        let (piece, tail) = rest.split_at(size);
        let p = rng.gen_range(0.3..1.0);
        for (i, &u) in piece.iter().enumerate() {
            for &v in &piece[i + 1..] {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        rest = tail;
    }
    g
}

/// Draw from one of: a random bipartite graph, a random bi-cotree model, or a
/// disjoint union of bicliques with a few flipped pairs.
pub fn propose_bipartite<R: Rng>(rng: &mut R, l: usize, r: usize) -> BipartiteGraph {
    match rng.gen_range(0..3) {
        0 => {
            let p = rng.gen_range(0.05..0.95);
            random_bipartite_with(rng, l, r, p)
        }
        1 => {
            let h = rng.gen_range(1..=3);
            random_bicograph(rng, l + r, h)
        }
        _ => {
            let mut g = Graph::new(l + r);
            let groups = rng.gen_range(1..=l.max(1));
            let group: Vec<usize> = (0..l + r).map(|_| rng.gen_range(0..groups)).collect();
            for a in 0..l {
                for b in l..l + r {
                    let flip = rng.gen_bool(0.05);
                    if (group[a] == group[b]) != flip {
                        g.add_edge(a, b);
                    }
                }
            }
            BipartiteGraph::new(g, Bitset::from_iter(l + r, 0..l)).expect("edges cross sides")
        }
    }
}

/// Random bi-cograph on `n` vertices of height at most `h`; sides are the leaf colors.
pub fn random_bicograph<R: Rng>(rng: &mut R, n: usize, h: usize) -> BipartiteGraph {
    let m = random_tree_model_with(rng, 2, h, n).map_rules(2, |r| {
        if r.contains(&(0, 1)) {
            bijoin_rule()
        } else {
            Rule::new()
        }
    });
    let g = m.evaluate().expect("leaves are 0..n");
    let left = Bitset::from_iter(n, m.leaf_colors().into_iter().filter(|&(_, c)| c == 0).map(|(v, _)| v));
    BipartiteGraph::new(g, left).expect("edges cross colors")
}

/// Random cograph on `n` vertices of height at most `h`.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize, h: usize) -> Graph {
    random_tree_model_with(rng, 1, h, n).evaluate().expect("leaves are 0..n")
}

/// `count` accepted draws, giving up after `max_tries` proposals.
pub fn sample<T, R: Rng>(
    rng: &mut R,
    count: usize,
    max_tries: usize,
    mut propose: impl FnMut(&mut R) -> T,
    mut accept: impl FnMut(&T) -> Result<bool>,
) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_tries {
        if out.len() == count {
            break;
        }
        let x = propose(rng);
        if accept(&x)? {
            out.push(x);
        }
    }
    if out.len() < count {
        return Err(Error::CapExceeded {
            what: "rejection sampling tries",
            size: max_tries,
            cap: max_tries,
        });
    }
    Ok(out)
}

/// `count` graphs with `min_n..=max_n` vertices admitted by `ex`.
pub fn graph_corpus(seed: u64, count: usize, min_n: usize, max_n: usize, ex: &Exclusions) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample(
        &mut rng,
        count,
        count * 2000,
        |rng| {
            let n = rng.gen_range(min_n..=max_n);
            propose_graph(rng, n)
        },
        |g| ex.admits(g),
    )
}

/// `count` bipartite graphs with sides of `1..=max_side` vertices admitted by `ex`.
pub fn bipartite_corpus(seed: u64, count: usize, max_side: usize, ex: &Exclusions) -> Result<Vec<BipartiteGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample(
        &mut rng,
        count,
        count * 2000,
        |rng| {
            let l = rng.gen_range(1..=max_side);
            let r = rng.gen_range(1..=max_side);
            propose_bipartite(rng, l, r)
        },
        |b| ex.admits_bipartite(b),
    )
}
