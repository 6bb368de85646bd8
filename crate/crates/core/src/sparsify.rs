//! Exact encodings of cographs, bi-cographs and 2-cosplit graphs into colored
//! graphs of small treedepth, and their decoders.
//!
//! A vertex set is refined level by level: odd levels split every part into
//! connected components and even levels into components of the (bipartite)
//! complement. Level `i` marks a representative of every part with `P{i}` and
//! joins it to the rest of the part. Two vertices are adjacent exactly when the
//! deepest level at which they share a part is odd.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::cosplit::{two_cosplit, TwoCosplit};
use crate::error::{Error, Result};
use crate::graph::io::GraphJson;
use crate::graph::{semi_induced, BipartiteGraph, Graph};
use crate::patterns::{degeneracy, longest_induced_path, treedepth, SearchCaps};

/// Graph with named unary predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub predicates: BTreeMap<String, Bitset>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoredGraphJson {
    pub graph: GraphJson,
    pub predicates: BTreeMap<String, Vec<usize>>,
}

impl ColoredGraph {
    pub fn new(graph: Graph) -> Self {
        Self {
            graph,
            predicates: BTreeMap::new(),
        }
    }

    pub fn predicate(&self, name: &str) -> Option<&Bitset> {
        self.predicates.get(name)
    }

    pub fn add_predicate(&mut self, name: String, set: Bitset) -> Result<()> {
        if set.capacity() != self.graph.n() {
            return Err(Error::InvalidParameter(format!("predicate {name} over the wrong vertex count")));
        }
        if self.predicates.contains_key(&name) {
            return Err(Error::InvalidParameter(format!("duplicate predicate {name}")));
        }
        self.predicates.insert(name, set);
        Ok(())
    }

    pub fn to_json(&self) -> ColoredGraphJson {
        ColoredGraphJson {
            graph: GraphJson::from_graph(&self.graph),
            predicates: self.predicates.iter().map(|(k, v)| (k.clone(), v.to_vec())).collect(),
        }
    }

    pub fn from_json(j: &ColoredGraphJson) -> Result<Self> {
        let graph = j.graph.to_graph()?;
        let n = graph.n();
        let mut out = Self::new(graph);
        for (name, vs) in &j.predicates {
            if let Some(&v) = vs.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out.add_predicate(name.clone(), Bitset::from_iter(n, vs.iter().copied()))?;
        }
        Ok(out)
    }
}

/// Successive refinements `levels[0] = {V}, levels[1], ..., levels[h]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionChain {
    pub levels: Vec<Vec<Bitset>>,
}

impl PartitionChain {
    pub fn height(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn is_discrete(&self) -> bool {
        self.levels.last().is_none_or(|l| l.iter().all(|p| p.len() <= 1))
    }

    /// Smallest vertex of every part at `level`.
    pub fn representatives(&self, level: usize) -> Vec<usize> {
        self.levels[level].iter().filter_map(Bitset::first).collect()
    }

    /// Parent part index at `level - 1` of every part at `level`.
    fn parents(&self, level: usize) -> Vec<usize> {
        self.levels[level]
            .iter()
            .map(|p| {
                let v = p.first().expect("nonempty");
                self.levels[level - 1].iter().position(|q| q.contains(v)).expect("refines")
            })
            .collect()
    }
}

/// Chain on `set` with `levels` levels after the first; `None` if it stops
/// refining before becoming discrete.
fn chain_with(
    set: &Bitset,
    levels: Option<usize>,
    odd: impl Fn(&Bitset) -> Vec<Bitset>,
    even: impl Fn(&Bitset) -> Vec<Bitset>,
) -> Option<PartitionChain> {
    let mut out = vec![if set.is_empty() { Vec::new() } else { vec![set.clone()] }];
    let mut stalled = 0;
    loop {
        let i = out.len() - 1;
        let last = &out[i];
        match levels {
            Some(h) if i >= h => break,
            None if last.iter().all(|p| p.len() <= 1) => break,
            // two consecutive levels without a split: the chain is stuck
            None if stalled >= 2 => return None,
            _ => {}
        }
        let next: Vec<Bitset> = last
            .iter()
            .flat_map(|p| if (i + 1) % 2 == 1 { odd(p) } else { even(p) })
            .collect();
        stalled = if next.len() == last.len() { stalled + 1 } else { 0 };
        out.push(next);
    }
    Some(PartitionChain { levels: out })
}

fn cograph_chain(g: &Graph, levels: Option<usize>) -> Option<PartitionChain> {
    chain_with(&g.all(), levels, |p| g.components_within(p), |p| g.co_components_within(p))
}

fn bicograph_chain(b: &BipartiteGraph, levels: Option<usize>) -> Option<PartitionChain> {
    let co = b.bipartite_complement();
    chain_with(
        &b.graph().all(),
        levels,
        |p| b.graph().components_within(p),
        |p| co.graph().components_within(p),
    )
}

/// Smallest `h` whose chain is discrete; fails if `g` is not a cograph.
pub fn required_levels(g: &Graph) -> Result<usize> {
    cograph_chain(g, None)
        .map(|c| c.height())
        .ok_or_else(|| Error::InvalidParameter("not a cograph".into()))
}

/// Smallest `h` whose bipartite chain is discrete; fails if `b` is not a bi-cograph.
pub fn required_levels_bipartite(b: &BipartiteGraph) -> Result<usize> {
    bicograph_chain(b, None)
        .map(|c| c.height())
        .ok_or_else(|| Error::InvalidParameter("not a bi-cograph".into()))
}

pub fn partition_chain_cograph(g: &Graph, h: usize) -> Result<PartitionChain> {
    let c = cograph_chain(g, Some(h)).expect("fixed height");
    if !c.is_discrete() {
        return Err(Error::InvalidParameter(format!("not a cograph within {h} levels")));
    }
    Ok(c)
}

pub fn partition_chain_bicograph(b: &BipartiteGraph, h: usize) -> Result<PartitionChain> {
    let c = bicograph_chain(b, Some(h)).expect("fixed height");
    if !c.is_discrete() {
        return Err(Error::InvalidParameter(format!("not a bi-cograph within {h} levels")));
    }
    Ok(c)
}

/// Single-representative layer: marks and star edges, on local ids.
struct Layer {
    edges: Vec<(usize, usize)>,
    marks: Vec<(String, Vec<usize>)>,
}

fn single_rep_layer(chain: &PartitionChain) -> Layer {
    let mut edges = Vec::new();
    let mut marks = Vec::new();
    for (i, level) in chain.levels.iter().enumerate() {
        marks.push((format!("P{i}"), chain.representatives(i)));
        if i == 0 {
            continue;
        }
        for p in level {
            let r = p.first().expect("nonempty");
            edges.extend(p.iter().filter(|&x| x != r).map(|x| (r, x)));
        }
    }
    Layer { edges, marks }
}

/// Cross-only layer of a bipartite chain: every part joins its smallest left
/// vertex to its right vertices and its smallest right vertex to its left
/// vertices. `K{i}` marks the representative kept from the parent on the other
/// side and `Z{i}` marks parts lying in one side.
fn cross_layer(chain: &PartitionChain, left: &Bitset) -> Layer {
    let mut edges = Vec::new();
    let mut marks = Vec::new();
    let mins = |p: &Bitset| (p.intersection(left).first(), p.difference(left).first());
    for (i, level) in chain.levels.iter().enumerate() {
        let parents = if i == 0 { Vec::new() } else { chain.parents(i) };
        let (mut pm, mut km, mut zm) = (Vec::new(), Vec::new(), Vec::new());
        for (pi, p) in level.iter().enumerate() {
            let (l, r) = mins(p);
            pm.extend(l);
            pm.extend(r);
            let (Some(l), Some(r)) = (l, r) else {
                zm.extend(p.iter());
                continue;
            };
            if i > 0 {
                let (pl, pr) = mins(&chain.levels[i - 1][parents[pi]]);
                if pl == Some(l) {
                    km.push(r);
                }
                if pr == Some(r) {
                    km.push(l);
                }
                for x in p {
                    edges.push((x, if left.contains(x) { r } else { l }));
                }
            }
        }
        marks.push((format!("P{i}"), pm));
        marks.push((format!("K{i}"), km));
        marks.push((format!("Z{i}"), zm));
    }
    Layer { edges, marks }
}

fn add_layer(out: &mut ColoredGraph, layer: Layer, prefix: &str, host: &[usize]) -> Result<()> {
    for (u, v) in layer.edges {
        let (u, v) = (host[u], host[v]);
        if u != v {
            out.graph.add_edge(u, v);
        }
    }
    let n = out.graph.n();
    for (name, vs) in layer.marks {
        let name = if prefix.is_empty() { name } else { format!("{prefix}.{name}") };
        out.add_predicate(name, Bitset::from_iter(n, vs.into_iter().map(|v| host[v])))?;
    }
    Ok(())
}

pub fn encode_cograph(g: &Graph, h: usize) -> Result<ColoredGraph> {
    let chain = partition_chain_cograph(g, h)?;
    let mut out = ColoredGraph::new(Graph::new(g.n()));
    let host: Vec<usize> = (0..g.n()).collect();
    add_layer(&mut out, single_rep_layer(&chain), "", &host)?;
    Ok(out)
}

/// As [`encode_cograph`] with the bipartite chain, plus `side.L` and `side.R`.
pub fn encode_bicograph(b: &BipartiteGraph, h: usize) -> Result<ColoredGraph> {
    let chain = partition_chain_bicograph(b, h)?;
    let mut out = ColoredGraph::new(Graph::new(b.n()));
    let host: Vec<usize> = (0..b.n()).collect();
    add_layer(&mut out, single_rep_layer(&chain), "", &host)?;
    out.add_predicate("side.L".into(), b.left().clone())?;
    out.add_predicate("side.R".into(), b.right())?;
    Ok(out)
}

/// Lowest level at which each vertex is marked, given marks for levels `0..=h`.
fn first_marks(n: usize, marks: &[&Bitset]) -> Vec<usize> {
    let mut m = vec![usize::MAX; n];
    for (i, p) in marks.iter().enumerate().rev() {
        for v in p.iter() {
            m[v] = i;
        }
    }
    m
}

/// `ids[i][x]`: the representative of the level-`i` part of `x`, recovered
/// from a single-representative layer. Level 0 is omitted.
fn single_rep_ids(e: &Graph, marks: &[&Bitset]) -> Result<Vec<Vec<usize>>> {
    let n = e.n();
    let m = first_marks(n, marks);
    let mut ids = vec![Vec::new()];
    for p in marks.iter().skip(1) {
        let mut level = Vec::with_capacity(n);
        for x in 0..n {
            if p.contains(x) {
                level.push(x);
                continue;
            }
            let r = e
                .neighbors(x)
                .intersection(p)
                .iter()
                .max_by_key(|&y| m[y])
                .ok_or_else(|| Error::Malformed(format!("vertex {x} has no representative")))?;
            level.push(r);
        }
        ids.push(level);
    }
    Ok(ids)
}

/// Adjacency from the deepest shared level.
fn odd_deepest(h: usize, same: impl Fn(usize) -> bool) -> bool {
    (1..=h).rev().find(|&i| same(i)).unwrap_or(0) % 2 == 1
}

fn family<'a>(c: &'a ColoredGraph, prefix: &str, letter: &str) -> Result<Vec<&'a Bitset>> {
    let mut out = Vec::new();
    while let Some(p) = c.predicate(&format!("{prefix}{letter}{}", out.len())) {
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::Malformed(format!("missing predicate {prefix}{letter}0")));
    }
    Ok(out)
}

pub fn decode_cograph(c: &ColoredGraph) -> Result<Graph> {
    let marks = family(c, "", "P")?;
    let ids = single_rep_ids(&c.graph, &marks)?;
    let h = marks.len() - 1;
    let n = c.graph.n();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if odd_deepest(h, |i| ids[i][u] == ids[i][v]) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn decode_bicograph(c: &ColoredGraph) -> Result<BipartiteGraph> {
    let marks = family(c, "", "P")?;
    let left = c
        .predicate("side.L")
        .ok_or_else(|| Error::Malformed("missing predicate side.L".into()))?;
    let ids = single_rep_ids(&c.graph, &marks)?;
    let h = marks.len() - 1;
    let n = c.graph.n();
    let mut g = Graph::new(n);
    for u in left {
        for v in 0..n {
            if !left.contains(v) && odd_deepest(h, |i| ids[i][u] == ids[i][v]) {
                g.add_edge(u, v);
            }
        }
    }
    BipartiteGraph::new(g, left.clone())
}

/// `ids[i][x]`: the smallest right vertex of the level-`i` part of `x`, or
/// `None` when that part lies in one side, recovered from a cross-only layer.
fn cross_ids(e: &Graph, left: &Bitset, p: &[&Bitset], k: &[&Bitset], z: &[&Bitset]) -> Result<Vec<Vec<Option<usize>>>> {
    let n = e.n();
    let h = p.len() - 1;
    if k.len() != p.len() || z.len() != p.len() {
        return Err(Error::Malformed("cross layer families of different lengths".into()));
    }
    let m = first_marks(n, p);
    let mut ids: Vec<Vec<Option<usize>>> = vec![vec![None; n]];
    for i in 1..=h {
        let prev = &ids[i - 1];
        let same_prev = |x: usize, y: usize| i == 1 || (prev[x].is_some() && prev[x] == prev[y]);
        let mut sigma = vec![None; n];
        for x in 0..n {
            if z[i].contains(x) {
                continue;
            }
            let candidates: Vec<usize> = e
                .neighbors(x)
                .intersection(p[i])
                .iter()
                .filter(|&y| left.contains(y) != left.contains(x) && same_prev(x, y))
                .collect();
            let pick = if p[i - 1].contains(x) {
                let mut kept = candidates.iter().copied().filter(|&y| k[i].contains(y));
                match (kept.next(), kept.next()) {
                    (Some(y), None) => Some(y),
                    _ => None,
                }
            } else {
                candidates.iter().copied().max_by_key(|&y| m[y])
            };
            sigma[x] = Some(pick.ok_or_else(|| Error::Malformed(format!("vertex {x} has no level-{i} partner")))?);
        }
        let level = (0..n)
            .map(|x| {
                if z[i].contains(x) {
                    None
                } else if left.contains(x) {
                    sigma[x]
                } else if p[i].contains(x) {
                    Some(x)
                } else {
                    sigma[x].and_then(|w| sigma[w])
                }
            })
            .collect();
        ids.push(level);
    }
    Ok(ids)
}

/// Encoding of `g` along a 2-cosplit. Part `p` gets `part{p}`, a
/// single-representative layer `A{p}.P{i}` inside the part, and for `p < q` a
/// cross-only layer `B{p}.{q}.{P,K,Z}{i}` between the parts. Layers are
/// edge-disjoint.
pub fn encode(g: &Graph, s: &TwoCosplit) -> Result<ColoredGraph> {
    let n = g.n();
    let parts: Vec<&Bitset> = s.parts.iter().filter(|p| !p.is_empty()).collect();
    let mut seen = Bitset::new(n);
    for p in &parts {
        if p.capacity() != n {
            return Err(Error::InvalidParameter("split over a different vertex count".into()));
        }
        if let Some(v) = p.intersection(&seen).first() {
            return Err(Error::Overlap(v));
        }
        seen.union_with(p);
    }
    if seen.len() != n {
        return Err(Error::InvalidParameter("split does not cover every vertex".into()));
    }
    let mut out = ColoredGraph::new(Graph::new(n));
    for (pi, x) in parts.iter().enumerate() {
        out.add_predicate(format!("part{pi}"), (*x).clone())?;
        let host = x.to_vec();
        let local = g.induced(&host);
        let chain = partition_chain_cograph(&local, required_levels(&local)?)?;
        add_layer(&mut out, single_rep_layer(&chain), &format!("A{pi}"), &host)?;
    }
    for (pi, x) in parts.iter().enumerate() {
        for (qi, y) in parts.iter().enumerate().skip(pi + 1) {
            let (xs, ys) = (x.to_vec(), y.to_vec());
            let local = semi_induced(g, &xs, &ys)?;
            let host: Vec<usize> = xs.iter().chain(&ys).copied().collect();
            let chain = partition_chain_bicograph(&local, required_levels_bipartite(&local)?)?;
            add_layer(&mut out, cross_layer(&chain, local.left()), &format!("B{pi}.{qi}"), &host)?;
        }
    }
    Ok(out)
}

/// Inverse of [`encode`]; predicates with other names are ignored.
pub fn decode(c: &ColoredGraph) -> Result<Graph> {
    let n = c.graph.n();
    let mut parts = Vec::new();
    while let Some(p) = c.predicate(&format!("part{}", parts.len())) {
        parts.push(p.to_vec());
    }
    let mut g = Graph::new(n);
    for (pi, xs) in parts.iter().enumerate() {
        if xs.len() < 2 {
            continue;
        }
        let local = c.graph.induced(xs);
        let marks = local_family(c, &format!("A{pi}."), "P", xs)?;
        let ids = single_rep_ids(&local, &refs(&marks))?;
        let h = marks.len() - 1;
        for a in 0..xs.len() {
            for b in a + 1..xs.len() {
                if odd_deepest(h, |i| ids[i][a] == ids[i][b]) {
                    g.add_edge(xs[a], xs[b]);
                }
            }
        }
    }
    for (pi, xs) in parts.iter().enumerate() {
        for (qi, ys) in parts.iter().enumerate().skip(pi + 1) {
            let local = semi_induced(&c.graph, xs, ys)?;
            let host: Vec<usize> = xs.iter().chain(ys).copied().collect();
            let prefix = format!("B{pi}.{qi}.");
            let [p, k, z] = ["P", "K", "Z"].map(|l| local_family(c, &prefix, l, &host));
            let (p, k, z) = (p?, k?, z?);
            let ids = cross_ids(local.graph(), local.left(), &refs(&p), &refs(&k), &refs(&z))?;
            let h = p.len() - 1;
            for a in 0..xs.len() {
                for b in xs.len()..host.len() {
                    if odd_deepest(h, |i| ids[i][a].is_some() && ids[i][a] == ids[i][b]) {
                        g.add_edge(host[a], host[b]);
                    }
                }
            }
        }
    }
    Ok(g)
}

fn refs(f: &[Bitset]) -> Vec<&Bitset> {
    f.iter().collect()
}

/// A predicate family restricted to `host` and renamed to local ids.
fn local_family(c: &ColoredGraph, prefix: &str, letter: &str, host: &[usize]) -> Result<Vec<Bitset>> {
    Ok(family(c, prefix, letter)?
        .into_iter()
        .map(|p| Bitset::from_iter(host.len(), (0..host.len()).filter(|&i| p.contains(host[i]))))
        .collect())
}

/// Measurements of an encoding.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SparsifyReport {
    pub n: usize,
    pub edges: usize,
    pub encoded_edges: usize,
    pub parts: usize,
    pub max_certificate_height: usize,
    pub degeneracy: usize,
    /// `h (N + N(N-1)/2)` for `N` parts and maximum certificate height `h`.
    pub degeneracy_bound: usize,
    /// Exact, when the graph is small enough.
    pub treedepth: Option<usize>,
    /// Vertices on a longest induced path of the encoding, when small enough.
    pub longest_induced_path: Option<usize>,
    pub predicates: usize,
    pub round_trip: bool,
}

pub fn report(g: &Graph, s: &TwoCosplit, c: &ColoredGraph) -> Result<SparsifyReport> {
    let caps = SearchCaps::default();
    let parts = s.size();
    let h = s.height();
    let small = c.graph.n() <= caps.treedepth;
    Ok(SparsifyReport {
        n: g.n(),
        edges: g.edge_count(),
        encoded_edges: c.graph.edge_count(),
        parts,
        max_certificate_height: h,
        degeneracy: degeneracy(&c.graph),
        degeneracy_bound: h * (parts + parts * parts.saturating_sub(1) / 2),
        treedepth: if small { Some(treedepth(&c.graph)?) } else { None },
        longest_induced_path: if small { Some(longest_induced_path(&c.graph)?) } else { None },
        predicates: c.predicates.len(),
        round_trip: decode(c)? == *g,
    })
}

/// 2-cosplit, encoding and report of a graph excluding `P_t`, its complement
/// and a semi-induced `H_k`.
pub fn sparsify_pipeline(g: &Graph, t: usize, k: usize) -> Result<(ColoredGraph, SparsifyReport)> {
    let s = two_cosplit(g, t, k)?;
    let c = encode(g, &s)?;
    let r = report(g, &s, &c)?;
    Ok((c, r))
}
