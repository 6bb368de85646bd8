//! Strong index of a graph and bipartite index of a bipartite graph, with
//! witnesses, and the extraction of half graphs from long index witnesses.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_cap, Mode, PatternWitness, SearchCaps};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

/// Sequences `a_1..a_k` and `b_1..b_k` with `a_i ~ b_j` and `b_i !~ a_j` for `i < j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl IndexWitness {
    pub fn order(&self) -> usize {
        self.a.len()
    }
}

fn check_staircase(g: &Graph, w: &IndexWitness) -> Result<()> {
    if w.a.len() != w.b.len() {
        return Err(Error::Invariant("witness sequences differ in length".into()));
    }
    let mut seen = Bitset::new(g.n());
    for &v in w.a.iter().chain(&w.b) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if seen.contains(v) {
            return Err(Error::Invariant(format!("vertex {v} repeated in witness")));
        }
        seen.insert(v);
    }
    let k = w.order();
    for i in 0..k {
        for j in i + 1..k {
            if !g.has_edge(w.a[i], w.b[j]) {
                return Err(Error::Invariant(format!("a{} not adjacent to b{}", i + 1, j + 1)));
            }
            if g.has_edge(w.b[i], w.a[j]) {
                return Err(Error::Invariant(format!("b{} adjacent to a{}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Checks the strong-index conditions: staircase, `a`'s a clique, `b`'s independent.
pub fn check_strong_index_witness(g: &Graph, w: &IndexWitness) -> Result<()> {
    check_staircase(g, w)?;
    let a = Bitset::from_iter(g.n(), w.a.iter().copied());
    let b = Bitset::from_iter(g.n(), w.b.iter().copied());
    if !g.is_clique(&a) {
        return Err(Error::Invariant("a-vertices do not form a clique".into()));
    }
    if !g.is_independent(&b) {
        return Err(Error::Invariant("b-vertices are not independent".into()));
    }
    Ok(())
}

/// Checks the bipartite-index conditions: staircase, `a`'s on one side, `b`'s on the other.
pub fn check_bipartite_index_witness(b: &BipartiteGraph, w: &IndexWitness) -> Result<()> {
    check_staircase(b.graph(), w)?;
    if let Some(&a0) = w.a.first() {
        let side = b.side(a0);
        if w.a.iter().any(|&v| b.side(v) != side) || w.b.iter().any(|&v| b.side(v) == side) {
            return Err(Error::Invariant("witness does not respect the sides".into()));
        }
    }
    Ok(())
}

pub fn strong_index(g: &Graph) -> Result<(usize, IndexWitness)> {
    strong_index_with(g, &SearchCaps::default())
}

/// Exact strong index. Every later `a_j` and `b_j` must lie in
/// `N(a_i) \ N(b_i)` for each earlier `i`, so the search state is the common
/// candidate set, memoised.
pub fn strong_index_with(g: &Graph, caps: &SearchCaps) -> Result<(usize, IndexWitness)> {
    check_cap("strong index host", g.n(), caps.index)?;
    let mut memo = HashMap::new();
    let all = g.all();
    let k = strong_best(g, &all, &mut memo);
    let mut w = IndexWitness::default();
    let mut cand = all;
    for remaining in (1..=k).rev() {
        let (a, b, next) = strong_moves(g, &cand)
            .find(|(_, _, next)| strong_best(g, next, &mut memo) + 1 == remaining)
            .expect("memoised value is achievable");
        w.a.push(a);
        w.b.push(b);
        cand = next;
    }
    debug_assert!(check_strong_index_witness(g, &w).is_ok());
    Ok((k, w))
}

fn strong_moves<'a>(
    g: &'a Graph,
    cand: &'a Bitset,
) -> impl Iterator<Item = (usize, usize, Bitset)> + 'a {
    cand.iter().flat_map(move |a| {
        cand.iter().filter(move |&b| b != a).map(move |b| {
            let mut next = cand.intersection(g.neighbors(a));
            next.difference_with(g.neighbors(b));
            next.remove(b);
            (a, b, next)
        })
    })
}

fn strong_best(g: &Graph, cand: &Bitset, memo: &mut HashMap<Bitset, usize>) -> usize {
    let size = cand.len();
    if size < 2 {
        return 0;
    }
    if let Some(&v) = memo.get(cand) {
        return v;
    }
    let ceiling = size / 2;
    let mut best = 1;
    for (_, _, next) in strong_moves(g, cand) {
        if best == ceiling {
            break;
        }
        if next.len() / 2 + 1 <= best {
            continue;
        }
        best = best.max(1 + strong_best(g, &next, memo));
    }
    memo.insert(cand.clone(), best);
    best
}

pub fn bipartite_index(b: &BipartiteGraph) -> Result<(usize, IndexWitness)> {
    bipartite_index_with(b, &SearchCaps::default())
}

/// Exact bipartite index, trying both assignments of the `a`'s to a side.
/// After choosing `(a, b)`, later `a`'s avoid `N(b)` and later `b`'s lie in `N(a)`.
pub fn bipartite_index_with(b: &BipartiteGraph, caps: &SearchCaps) -> Result<(usize, IndexWitness)> {
    check_cap("bipartite index host", b.n(), caps.index)?;
    let g = b.graph();
    let mut best = (0, IndexWitness::default());
    for (sa, sb) in [(b.left().clone(), b.right()), (b.right(), b.left().clone())] {
        let mut memo = HashMap::new();
        let k = bip_best(g, &sa, &sb, &mut memo);
        if k > best.0 {
            let mut w = IndexWitness::default();
            let (mut ca, mut cb) = (sa, sb);
            for remaining in (1..=k).rev() {
                let (x, y, na, nb) = bip_moves(g, &ca, &cb)
                    .find(|(_, _, na, nb)| bip_best(g, na, nb, &mut memo) + 1 == remaining)
                    .expect("memoised value is achievable");
                w.a.push(x);
                w.b.push(y);
                ca = na;
                cb = nb;
            }
            best = (k, w);
        }
    }
    debug_assert!(check_bipartite_index_witness(b, &best.1).is_ok());
    Ok(best)
}

fn bip_moves<'a>(
    g: &'a Graph,
    ca: &'a Bitset,
    cb: &'a Bitset,
) -> impl Iterator<Item = (usize, usize, Bitset, Bitset)> + 'a {
    ca.iter().flat_map(move |a| {
        cb.iter().map(move |b| {
            let mut na = ca.difference(g.neighbors(b));
            na.remove(a);
            let mut nb = cb.intersection(g.neighbors(a));
            nb.remove(b);
            (a, b, na, nb)
        })
    })
}

fn bip_best(
    g: &Graph,
    ca: &Bitset,
    cb: &Bitset,
    memo: &mut HashMap<(Bitset, Bitset), usize>,
) -> usize {
    if ca.is_empty() || cb.is_empty() {
        return 0;
    }
    let key = (ca.clone(), cb.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let ceiling = ca.len().min(cb.len());
    let mut best = 1;
    for (_, _, na, nb) in bip_moves(g, ca, cb) {
        if best == ceiling {
            break;
        }
        if na.len().min(nb.len()) + 1 <= best {
            continue;
        }
        best = best.max(1 + bip_best(g, &na, &nb, memo));
    }
    memo.insert(key, best);
    best
}

/// From a bipartite-index witness of order at least `2k + 1`, an embedding of
/// `H_k` (pattern labelling `a_i = i - 1`, `b_j = k + j - 1`) as an induced
/// side-respecting subgraph of `b`.
///
/// Indices are coloured by whether `a_i ~ b_i`; a colour class of size `k + 1`
/// yields `H_{k+1}` (adjacent class) or, after shifting the `b`'s by one, `H_k`.
pub fn half_graph_from_index(
    b: &BipartiteGraph,
    w: &IndexWitness,
    k: usize,
) -> Result<PatternWitness> {
    check_bipartite_index_witness(b, w)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if w.order() < 2 * k + 1 {
        return Err(Error::InvalidParameter(format!(
            "witness of order {} is too short for H_{k}",
            w.order()
        )));
    }
    let g = b.graph();
    let (black, white): (Vec<usize>, Vec<usize>) =
        (0..w.order()).partition(|&i| g.has_edge(w.a[i], w.b[i]));
    let mut mapping = vec![0; 2 * k];
    if black.len() >= k + 1 {
        for m in 0..k {
            mapping[m] = w.a[black[m]];
            mapping[k + m] = w.b[black[m]];
        }
    } else {
        debug_assert!(white.len() >= k + 1);
        for m in 0..k {
            mapping[m] = w.a[white[m]];
            mapping[k + m] = w.b[white[m + 1]];
        }
    }
    Ok(PatternWitness {
        mapping,
        mode: Mode::Induced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use crate::patterns::check_induced_witness;

    #[test]
    fn strong_index_of_threshold_graphs() {
        for k in 1..=4 {
            let r = universal_threshold(k).unwrap();
            let (s, w) = strong_index(&r).unwrap();
            assert_eq!(s, k);
            check_strong_index_witness(&r, &w).unwrap();
        }
        assert_eq!(strong_index(&Graph::new(1)).unwrap().0, 0);
        assert_eq!(strong_index(&Graph::new(0)).unwrap().0, 0);
        assert_eq!(strong_index(&Graph::new(2)).unwrap().0, 1);
    }

    #[test]
    fn bipartite_index_examples() {
        assert_eq!(bipartite_index(&complete_bipartite(3, 3)).unwrap().0, 1);
        for k in 1..=4 {
            let h = half_graph(k).unwrap();
            let (s, w) = bipartite_index(&h).unwrap();
            assert_eq!(s, k);
            check_bipartite_index_witness(&h, &w).unwrap();
        }
        assert_eq!(bipartite_index(&complete_bipartite(3, 0)).unwrap().0, 0);
    }

    #[test]
    fn half_graph_extraction_both_colours() {
        let h5 = half_graph(5).unwrap();
        let h2 = half_graph(2).unwrap();
        let (k, w) = bipartite_index(&h5).unwrap();
        assert_eq!(k, 5);
        let pw = half_graph_from_index(&h5, &w, 2).unwrap();
        check_induced_witness(h5.graph(), h2.graph(), &pw).unwrap();

        let c = h5.bipartite_complement();
        let (k, w) = bipartite_index(&c).unwrap();
        assert!(k >= 5);
        let pw = half_graph_from_index(&c, &w, 2).unwrap();
        check_induced_witness(c.graph(), h2.graph(), &pw).unwrap();

        let h3 = half_graph(3).unwrap();
        let (_, w) = bipartite_index(&h3).unwrap();
        let pw = half_graph_from_index(&h3, &w, 1).unwrap();
        check_induced_witness(h3.graph(), half_graph(1).unwrap().graph(), &pw).unwrap();
        assert!(half_graph_from_index(&h3, &w, 2).is_err());
    }
}
