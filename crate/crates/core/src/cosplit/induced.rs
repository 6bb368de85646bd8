//! Cosplits of graphs excluding `P_t` and its complement, by induction on the
//! strong index over Gyárfás decompositions of the graph and of the
//! complements of its level-1 bags.

use super::Cosplit;
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::generate::path;
use crate::graph::Graph;
use crate::gyarfas::{build_on, RootRule};
use crate::patterns::{find_induced, strong_index, SearchCaps};
use crate::tree_model::{build_cotree_on, Cotree};

/// Cosplit of `g` of size at most [`super::cosplit_size_bound`]`(t, k)` and
/// height at most `2k`, where `k` is the exact strong index when `g` is small
/// enough and `k_budget` otherwise.
pub fn cosplit(g: &Graph, t: usize, k_budget: Option<usize>) -> Result<Cosplit> {
    let t = t.max(4);
    check_excluded_paths(g, t)?;
    let caps = SearchCaps::default();
    let k = if g.n() <= caps.index {
        strong_index(g)?.0
    } else {
        k_budget.ok_or_else(|| {
            Error::InvalidParameter("graph too large for an exact strong index and no budget given".into())
        })?
    };
    let parts = split(g, &g.complement(), &g.all(), k)?;
    let (parts, certificates) = parts.into_iter().unzip();
    Ok(Cosplit {
        parts,
        certificates,
    }
    .compact())
}

/// Fails with the witness if `g` contains an induced `P_t` or its complement.
pub(crate) fn check_excluded_paths(g: &Graph, t: usize) -> Result<()> {
    let caps = SearchCaps::default();
    if g.n() > caps.host || t > caps.pattern {
        return Ok(());
    }
    let pt = path(t)?;
    for (name, pattern) in [(format!("P{t}"), pt.clone()), (format!("co-P{t}"), pt.complement())] {
        if let Some(witness) = find_induced(g, &pattern)? {
            return Err(Error::PatternFound {
                pattern: name,
                witness,
            });
        }
    }
    Ok(())
}

/// Budget for a recursive call: the exact index of `g[set]` when small enough,
/// else `k - 1`. The exact value must be below `k`.
fn child_budget(g: &Graph, set: &Bitset, k: usize) -> Result<usize> {
    if set.len() <= SearchCaps::default().index {
        let (s, _) = strong_index(&g.induced(&set.to_vec()))?;
        if s >= k {
            return Err(Error::Invariant(format!(
                "strong index did not drop: {s} in a bag of a graph with budget {k}"
            )));
        }
        Ok(s)
    } else {
        Ok(k - 1)
    }
}

type Parts = Vec<(Bitset, Cotree)>;

fn certify(g: &Graph, set: &Bitset) -> Result<Cotree> {
    build_cotree_on(g, set).ok_or_else(|| Error::Invariant("base part is not a cograph".into()))
}

/// Aligned list of parts of a cosplit of `g[set]`; parts may be empty.
fn split(g: &Graph, co: &Graph, set: &Bitset, k: usize) -> Result<Parts> {
    let n = g.n();
    if set.is_empty() {
        return Ok(Vec::new());
    }
    if k <= 1 || set.len() <= 2 {
        let u = set.first().expect("nonempty");
        let x = set.intersection(g.neighbors(u));
        // u together with its non-neighbours still induces a cograph
        let y = set.difference(&x);
        return Ok(vec![(certify(g, &x)?, x), (certify(g, &y)?, y)]
        .into_iter()
        .map(|(c, p)| (p, c))
        .collect());
    }

    let y = build_on(g, set, &RootRule::Smallest)?;
    let bags = y.bags();

    // P_0: the root bags, pairwise non-adjacent
    let roots: Vec<usize> = y.roots().map(|r| bags[r].vertices.first().expect("singleton")).collect();
    let p0 = Bitset::from_iter(n, roots.iter().copied());

    // P_{i,l} for i >= 2: union over level-i bags of the l-th part of their cosplit
    let mut deep: Vec<Vec<Parts>> = Vec::new();
    for bag in bags.iter().filter(|b| b.level >= 2) {
        let budget = child_budget(g, &bag.vertices, k)?;
        let sub = split(g, co, &bag.vertices, budget)?;
        let level = bag.level - 2;
        if deep.len() <= level {
            deep.resize(level + 1, Vec::new());
        }
        deep[level].push(sub);
    }

    // Level-1 bags: co-components C, decompositions Y_C of the complement
    let mut p10: Vec<Vec<usize>> = Vec::new();
    // inner[j-1][bag] = cosplits of the level-j bags of the Y_C inside that level-1 bag
    let mut inner: Vec<Vec<Vec<Parts>>> = Vec::new();
    let level_one: Vec<&Bitset> = bags.iter().filter(|b| b.level == 1).map(|b| &b.vertices).collect();
    for (bi, b) in level_one.iter().enumerate() {
        let mut clique = Vec::new();
        for c in g.co_components_within(b) {
            let yc = build_on(co, &c, &RootRule::Smallest)?;
            for bag in yc.bags() {
                if bag.level == 0 {
                    clique.push(bag.vertices.first().expect("singleton"));
                    continue;
                }
                let budget = child_budget(g, &bag.vertices, k)?;
                let sub = split(g, co, &bag.vertices, budget)?;
                let j = bag.level - 1;
                if inner.len() <= j {
                    inner.resize(j + 1, vec![Vec::new(); level_one.len()]);
                }
                inner[j][bi].push(sub);
            }
        }
        p10.push(clique);
    }

    let mut out: Parts = Vec::new();
    out.push((p0.clone(), Cotree::edgeless(&p0.to_vec())));
    let p10_set = Bitset::from_iter(n, p10.iter().flatten().copied());
    let p10_cert = Cotree::union(p10.iter().map(|c| Cotree::clique(c)).collect());
    out.push((p10_set, p10_cert));

    for level in deep {
        let width = level.iter().map(Vec::len).max().unwrap_or(0);
        for l in 0..width {
            let mut part = Bitset::new(n);
            let mut certs = Vec::new();
            for sub in &level {
                if let Some((p, c)) = sub.get(l) {
                    part.union_with(p);
                    certs.push(c.clone());
                }
            }
            out.push((part, Cotree::union(certs)));
        }
    }
    for level in inner {
        let width = level.iter().flatten().map(Vec::len).max().unwrap_or(0);
        for l in 0..width {
            let mut part = Bitset::new(n);
            let mut per_bag = Vec::new();
            for subs in &level {
                let mut joined = Vec::new();
                for sub in subs {
                    if let Some((p, c)) = sub.get(l) {
                        part.union_with(p);
                        joined.push(c.clone());
                    }
                }
                per_bag.push(Cotree::join(joined));
            }
            out.push((part, Cotree::union(per_bag)));
        }
    }
    Ok(out)
}
