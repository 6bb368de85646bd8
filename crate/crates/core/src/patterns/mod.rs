//! Exact induced and semi-induced pattern search, index invariants with
//! witnesses, and small exact oracles.

pub mod index;
pub mod oracles;
pub mod threshold;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

pub use index::{
    bipartite_index, bipartite_index_with, check_bipartite_index_witness,
    check_strong_index_witness, half_graph_from_index, strong_index, strong_index_with,
    IndexWitness,
};
pub use oracles::{
    chromatic_number, clique_number, degeneracy, homogeneous_set, independence_number,
    longest_induced_path, maximum_clique, maximum_independent_set, treedepth,
};
pub use threshold::{is_threshold, threshold_embed};

/// Size limits for the exponential searches. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCaps {
    pub pattern: usize,
    pub host: usize,
    pub index: usize,
    pub chromatic: usize,
    pub treedepth: usize,
    pub clique: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        Self {
            pattern: 10,
            host: 64,
            index: 24,
            chromatic: 16,
            treedepth: 16,
            clique: 30,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Induced,
    SemiInduced,
}

/// `mapping[p]` is the host vertex playing pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub mapping: Vec<usize>,
    pub mode: Mode,
}

pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<PatternWitness>> {
    find_induced_with(g, pattern, &SearchCaps::default())
}

pub fn find_induced_with(
    g: &Graph,
    pattern: &Graph,
    caps: &SearchCaps,
) -> Result<Option<PatternWitness>> {
    check_cap("pattern", pattern.n(), caps.pattern)?;
    check_cap("host", g.n(), caps.host)?;
    let order = search_order(pattern);
    let mut s = Search::new(g, pattern, &order, &|_, _| true, true);
    Ok(s.run().then(|| PatternWitness {
        mapping: s.mapping,
        mode: Mode::Induced,
    }))
}

/// Disjoint `A`, `B` in `g` such that `g[A, B]` is the side-respecting image of `pattern`.
pub fn find_semi_induced(g: &Graph, pattern: &BipartiteGraph) -> Result<Option<PatternWitness>> {
    find_semi_induced_with(g, pattern, &SearchCaps::default())
}

pub fn find_semi_induced_with(
    g: &Graph,
    pattern: &BipartiteGraph,
    caps: &SearchCaps,
) -> Result<Option<PatternWitness>> {
    check_cap("pattern", pattern.n(), caps.pattern)?;
    check_cap("host", g.n(), caps.host)?;
    let order = search_order(pattern.graph());
    let left = pattern.left().clone();
    let cross = move |p: usize, q: usize| left.contains(p) != left.contains(q);
    let mut s = Search::new(g, pattern.graph(), &order, &cross, false);
    Ok(s.run().then(|| PatternWitness {
        mapping: s.mapping,
        mode: Mode::SemiInduced,
    }))
}

/// Search for a pattern inside a bipartite host, mapping the pattern's left
/// side into `host_side` of `b` and its right side into the other side.
pub fn find_in_bipartite(
    b: &BipartiteGraph,
    pattern: &BipartiteGraph,
) -> Result<Option<PatternWitness>> {
    let caps = SearchCaps::default();
    check_cap("pattern", pattern.n(), caps.pattern)?;
    check_cap("host", b.n(), caps.host)?;
    for host_left in [b.left().clone(), b.right()] {
        let w = find_sided(b.graph(), pattern, &host_left)?;
        if w.is_some() {
            return Ok(w);
        }
    }
    Ok(None)
}

fn find_sided(g: &Graph, pattern: &BipartiteGraph, host_left: &Bitset) -> Result<Option<PatternWitness>> {
    let order = search_order(pattern.graph());
    let mut s = Search::new(g, pattern.graph(), &order, &|_, _| true, false);
    s.side_filter = Some((pattern.left().clone(), host_left.clone()));
    Ok(s.run().then(|| PatternWitness {
        mapping: s.mapping,
        mode: Mode::Induced,
    }))
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has an already-placed neighbour when possible.
fn search_order(p: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(p.n());
    let mut placed = Bitset::new(p.n());
    while order.len() < p.n() {
        let next = p
            .vertices()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (p.neighbors(v).intersection_len(&placed), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    /// Whether adjacency between two pattern vertices must be preserved.
    cross: &'a dyn Fn(usize, usize) -> bool,
    degree_prune: bool,
    /// Pattern left side and the host set it must map into.
    side_filter: Option<(Bitset, Bitset)>,
    mapping: Vec<usize>,
    used: Bitset,
}

impl<'a> Search<'a> {
    fn new(
        host: &'a Graph,
        pattern: &'a Graph,
        order: &'a [usize],
        cross: &'a dyn Fn(usize, usize) -> bool,
        degree_prune: bool,
    ) -> Self {
        Self {
            host,
            pattern,
            order,
            cross,
            degree_prune,
            side_filter: None,
            mapping: vec![usize::MAX; pattern.n()],
            used: Bitset::new(host.n()),
        }
    }

    fn run(&mut self) -> bool {
        if self.pattern.n() > self.host.n() {
            return false;
        }
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.used.complement();
        if let Some((pl, hl)) = &self.side_filter {
            if pl.contains(p) {
                cand.intersect_with(hl);
            } else {
                cand.difference_with(hl);
            }
        }
        for &q in &self.order[..depth] {
            if !(self.cross)(p, q) {
                continue;
            }
            let hq = self.host.neighbors(self.mapping[q]);
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(hq);
            } else {
                cand.difference_with(hq);
            }
            if cand.is_empty() {
                return false;
            }
        }
        let need = self.pattern.degree(p);
        for v in cand.iter() {
            if self.degree_prune && self.host.degree(v) < need {
                continue;
            }
            self.mapping[p] = v;
            self.used.insert(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(v);
        }
        self.mapping[p] = usize::MAX;
        false
    }
}

fn check_injective(host_n: usize, w: &PatternWitness, pattern_n: usize) -> Result<()> {
    if w.mapping.len() != pattern_n {
        return Err(Error::Invariant(format!(
            "witness maps {} vertices, pattern has {pattern_n}",
            w.mapping.len()
        )));
    }
    let mut seen = Bitset::new(host_n);
    for &v in &w.mapping {
        if v >= host_n {
            return Err(Error::VertexOutOfRange { vertex: v, n: host_n });
        }
        if seen.contains(v) {
            return Err(Error::Invariant(format!("witness uses vertex {v} twice")));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Re-verify an induced embedding against the host.
pub fn check_induced_witness(g: &Graph, pattern: &Graph, w: &PatternWitness) -> Result<()> {
    check_injective(g.n(), w, pattern.n())?;
    for p in pattern.vertices() {
        for q in p + 1..pattern.n() {
            if pattern.has_edge(p, q) != g.has_edge(w.mapping[p], w.mapping[q]) {
                return Err(Error::Invariant(format!(
                    "pattern pair {p}-{q} not reflected by host pair {}-{}",
                    w.mapping[p], w.mapping[q]
                )));
            }
        }
    }
    Ok(())
}

/// Re-verify a semi-induced embedding: only cross-side pattern pairs are checked.
pub fn check_semi_induced_witness(
    g: &Graph,
    pattern: &BipartiteGraph,
    w: &PatternWitness,
) -> Result<()> {
    check_injective(g.n(), w, pattern.n())?;
    for p in pattern.left() {
        for q in &pattern.right() {
            if pattern.has_edge(p, q) != g.has_edge(w.mapping[p], w.mapping[q]) {
                return Err(Error::Invariant(format!(
                    "cross pair {p}-{q} not reflected by host pair {}-{}",
                    w.mapping[p], w.mapping[q]
                )));
            }
        }
    }
    Ok(())
}

/// Largest `k <= limit` such that `g` contains an induced `R_k`.
pub fn max_induced_threshold(g: &Graph, limit: usize) -> Result<usize> {
    let mut best = 0;
    for k in 1..=limit {
        let rk = crate::graph::generate::universal_threshold(k)?;
        if find_induced(g, &rk)?.is_none() {
            break;
        }
        best = k;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;

    #[test]
    fn induced_path_in_longer_path() {
        let p5 = path(5).unwrap();
        let p4 = path(4).unwrap();
        let w = find_induced(&p5, &p4).unwrap().unwrap();
        check_induced_witness(&p5, &p4, &w).unwrap();
        assert!(find_induced(&cycle(4).unwrap(), &p4).unwrap().is_none());
    }

    #[test]
    fn threshold_in_itself() {
        for k in 1..=4 {
            let r = universal_threshold(k).unwrap();
            let w = find_induced(&r, &r).unwrap().unwrap();
            check_induced_witness(&r, &r, &w).unwrap();
        }
    }

    #[test]
    fn semi_induced_examples() {
        let r3 = universal_threshold(3).unwrap();
        let h3 = half_graph(3).unwrap();
        let w = find_semi_induced(&r3, &h3).unwrap().unwrap();
        check_semi_induced_witness(&r3, &h3, &w).unwrap();
        let natural = PatternWitness {
            mapping: (0..6).collect(),
            mode: Mode::SemiInduced,
        };
        check_semi_induced_witness(&r3, &h3, &natural).unwrap();

        let edge = half_graph(1).unwrap();
        assert!(find_semi_induced(&edgeless(6), &edge).unwrap().is_none());
        assert!(find_semi_induced(&complete(6), &half_graph(2).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn caps_are_enforced() {
        let big = path(11).unwrap();
        assert!(matches!(
            find_induced(&big, &big),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bipartite_host_search_respects_sides() {
        // P4 as bipartite contains H2 with sides respected
        let p4 = bipartite_path(4).unwrap();
        let h2 = half_graph(2).unwrap();
        let w = find_in_bipartite(&p4, &h2).unwrap().unwrap();
        check_induced_witness(p4.graph(), h2.graph(), &w).unwrap();
        assert!(find_in_bipartite(&complete_bipartite(3, 3), &h2).unwrap().is_none());
    }
}
