//! 2-cosplits of graphs excluding `P_t`, its complement, and a semi-induced
//! half-graph: a cosplit refined by bipartite 2-cosplits of every pair of its parts.

use std::collections::BTreeMap;

use super::bipartite::two_cosplit_bipartite;
use super::induced::check_excluded_paths;
use super::{common_refinement, cosplit, TwoCosplit};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::generate::half_graph;
use crate::graph::{semi_induced, Graph};
use crate::patterns::{find_semi_induced, SearchCaps};
use crate::tree_model::{BiCotree, Cotree};

/// 2-cosplit of `g`, assuming `g` excludes `P_t` and its complement as
/// induced subgraphs and `H_k` as a semi-induced subgraph.
pub fn two_cosplit(g: &Graph, t: usize, k: usize) -> Result<TwoCosplit> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let t = t.max(5);
    check_excluded_paths(g, t)?;
    check_half_graph(g, k)?;
    let n = g.n();
    let p0 = cosplit(g, t, Some(2 * k))?;
    let m = p0.parts.len();

    let mut pair_splits: BTreeMap<(usize, usize), TwoCosplit> = BTreeMap::new();
    for p in 0..m {
        for q in p + 1..m {
            let (x, y) = (p0.parts[p].to_vec(), p0.parts[q].to_vec());
            let local = semi_induced(g, &x, &y)?;
            let host: Vec<usize> = x.iter().chain(&y).copied().collect();
            let s = two_cosplit_bipartite(&local, t, Some(2 * k))?;
            pair_splits.insert((p, q), relabel(&s, n, &host)?);
        }
    }

    let refs: Vec<&TwoCosplit> = pair_splits.values().collect();
    let parts = common_refinement(n, &p0.parts, &refs);
    let owner = |part: &Bitset| {
        let v = part.first().expect("nonempty");
        p0.parts.iter().position(|c| c.contains(v)).expect("covered")
    };
    let owners: Vec<usize> = parts.iter().map(owner).collect();
    let part_certificates = parts
        .iter()
        .zip(&owners)
        .map(|(part, &o)| p0.certificates[o].induce(part))
        .collect();

    let mut pair_certificates = BTreeMap::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (pi, pj) = (&parts[i], &parts[j]);
            let (oi, oj) = (owners[i], owners[j]);
            let cert = if oi == oj {
                p0.certificates[oi].semi_induce_model(pi, pj)?
            } else {
                let s = &pair_splits[&(oi.min(oj), oi.max(oj))];
                let part_of = s.part_of();
                let a = part_of[pi.first().expect("nonempty")].expect("covered");
                let c = part_of[pj.first().expect("nonempty")].expect("covered");
                let cert = s
                    .pair(a, c)
                    .ok_or_else(|| Error::Invariant("missing pair certificate".into()))?;
                cert.induce(&pi.union(pj)).recolored(|v| usize::from(!pi.contains(v)))
            };
            pair_certificates.insert((i, j), cert);
        }
    }
    Ok(TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates,
    })
}

fn check_half_graph(g: &Graph, k: usize) -> Result<()> {
    let caps = SearchCaps::default();
    if g.n() > caps.host || 2 * k > caps.pattern {
        return Ok(());
    }
    if let Some(witness) = find_semi_induced(g, &half_graph(k)?)? {
        return Err(Error::PatternFound {
            pattern: format!("H{k}"),
            witness,
        });
    }
    Ok(())
}

/// Rename the vertices of a split over local ids to `host[local]` in a graph on `n` vertices.
fn relabel(s: &TwoCosplit, n: usize, host: &[usize]) -> Result<TwoCosplit> {
    let parts = s
        .parts
        .iter()
        .map(|p| Bitset::from_iter(n, p.iter().map(|v| host[v])))
        .collect();
    let part_certificates = s
        .part_certificates
        .iter()
        .map(|c| Cotree::new(c.relabeled(|v| host[v])))
        .collect::<Result<_>>()?;
    let pair_certificates = s
        .pair_certificates
        .iter()
        .map(|(&key, c)| Ok((key, BiCotree::new(c.relabeled(|v| host[v]))?)))
        .collect::<Result<_>>()?;
    Ok(TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates,
    })
}
