//! 2-cosplits of bipartite graphs excluding `P_t` and its bipartite
//! complement, by induction on the bipartite index.

use super::{complement_transfer, merge_components, refine_partition, side_aligned, side_split, TwoCosplit};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::generate::{bipartite_path, bipartite_path_complement};
use crate::graph::BipartiteGraph;
use crate::gyarfas::{build_on, GyarfasDecomposition, RootRule};
use crate::patterns::{bipartite_index, find_in_bipartite, SearchCaps};
use crate::tree_model::Cotree;

/// 2-cosplit of `b` refining its bipartition, of size at most
/// [`super::bipartite_size_bound`]`(t, k)` and height at most `2k`, where `k`
/// is the exact bipartite index when `b` is small enough and `k_budget` otherwise.
pub fn two_cosplit_bipartite(b: &BipartiteGraph, t: usize, k_budget: Option<usize>) -> Result<TwoCosplit> {
    let t = t.max(5);
    check_excluded(b, t)?;
    let k = if b.n() <= SearchCaps::default().index {
        bipartite_index(b)?.0
    } else {
        k_budget.ok_or_else(|| {
            Error::InvalidParameter("graph too large for an exact bipartite index and no budget given".into())
        })?
    };
    Ok(split(b, &Bitset::full(b.n()), k)?.compact())
}

fn check_excluded(b: &BipartiteGraph, t: usize) -> Result<()> {
    let caps = SearchCaps::default();
    if b.n() > caps.host || t > caps.pattern {
        return Ok(());
    }
    for (name, pattern) in [
        (format!("P{t}"), bipartite_path(t)?),
        (format!("bipartite-complement-P{t}"), bipartite_path_complement(t)?),
    ] {
        if let Some(witness) = find_in_bipartite(b, &pattern)? {
            return Err(Error::PatternFound {
                pattern: name,
                witness,
            });
        }
    }
    Ok(())
}

/// Budget for `b[set]`: exact bipartite index when small, else `k - 1`; the
/// exact value must be below `k`.
fn child_budget(b: &BipartiteGraph, set: &Bitset, k: usize) -> Result<usize> {
    if set.len() <= SearchCaps::default().index {
        let (s, _) = bipartite_index(&b.induced(&set.to_vec()))?;
        if s >= k {
            return Err(Error::Invariant(format!(
                "bipartite index did not drop: {s} in a piece of a graph with budget {k}"
            )));
        }
        Ok(s)
    } else {
        Ok(k - 1)
    }
}

/// Vertices of a bag together with its descendants at levels of the other parity.
fn bag_graph(y: &GyarfasDecomposition, bag: usize) -> Bitset {
    let level = y.bags()[bag].level;
    let mut out = y.bags()[bag].vertices.clone();
    let mut stack = y.children(bag).to_vec();
    while let Some(x) = stack.pop() {
        let bx = &y.bags()[x];
        if (bx.level + level) % 2 == 1 {
            out.union_with(&bx.vertices);
        }
        stack.extend(y.children(x));
    }
    out
}

fn level_unions(y: &GyarfasDecomposition) -> Vec<Bitset> {
    (0..=y.height()).map(|i| y.level_union(i)).collect()
}

/// Split of `b[set]` with index budget `k`; parts are aligned and may be empty.
fn split(b: &BipartiteGraph, set: &Bitset, k: usize) -> Result<TwoCosplit> {
    let n = b.n();
    if set.is_empty() {
        return Ok(TwoCosplit::empty(n));
    }
    if k <= 1 {
        return side_split(b, set);
    }

    // isolated vertices on both sides: work in the bipartite complement
    let g = b.graph();
    let isolated = |side: &Bitset| side.iter().any(|v| !g.neighbors(v).intersects(set));
    let in_left = set.intersection(b.left());
    let in_right = set.difference(b.left());
    let complemented = isolated(&in_left) && isolated(&in_right);
    let complement;
    let w = if complemented {
        complement = b.bipartite_complement();
        &complement
    } else {
        b
    };
    let wg = w.graph();
    let right_isolated = in_right.iter().any(|v| !wg.neighbors(v).intersects(set));
    let root_side = if right_isolated { in_right.clone() } else { in_left.clone() };

    let y = build_on(wg, set, &RootRule::InSet(root_side))?;
    let unions = level_unions(&y);
    let mut level_splits = Vec::with_capacity(unions.len());
    for i in 0..unions.len() {
        let mut pieces = Vec::new();
        for (bi, bag) in y.bags().iter().enumerate() {
            if bag.level != i {
                continue;
            }
            let vb = bag_graph(&y, bi);
            let piece = match i {
                0 => side_split(w, &vb)?,
                1 => level_one(w, &vb, &bag.vertices, k)?,
                _ => {
                    let budget = child_budget(w, &vb, k)?;
                    split(w, &vb, budget)?
                }
            };
            pieces.push(side_aligned(w.left(), piece));
        }
        level_splits.push(merge_components(wg, pieces)?);
    }
    let refined = refine_partition(w, &unions, &level_splits)?;
    let out = if complemented {
        complement_transfer(b.left(), &refined)
    } else {
        refined
    };
    Ok(side_aligned(b.left(), out))
}

/// Split of `w[vb]` for a level-1 bag `bag`, through a Gyárfás decomposition
/// of the bipartite complement rooted on the bag's side.
fn level_one(w: &BipartiteGraph, vb: &Bitset, bag: &Bitset, k: usize) -> Result<TwoCosplit> {
    let n = w.n();
    let co = w.bipartite_complement();
    let cg = co.graph();
    // vertices outside the bag that are isolated in the complement are set aside
    let dropped: Bitset = vb.difference(bag).iter().filter(|&v| !cg.neighbors(v).intersects(vb)).fold(
        Bitset::new(n),
        |mut acc, v| {
            acc.insert(v);
            acc
        },
    );
    let kept = vb.difference(&dropped);
    let y = build_on(cg, &kept, &RootRule::InSet(bag.clone()))?;
    let mut unions = level_unions(&y);
    if unions.len() < 2 {
        unions.resize(2, Bitset::new(n));
    }
    unions[1].union_with(&dropped);

    let mut level_splits = Vec::with_capacity(unions.len());
    for j in 0..unions.len() {
        // the level-j graph: W_j against the higher levels of the other parity
        let mut cover = unions[j].clone();
        for (jj, u) in unions.iter().enumerate().skip(j + 1) {
            if (jj - j) % 2 == 1 {
                cover.union_with(u);
            }
        }
        let mut pieces = Vec::new();
        let mut seen = Bitset::new(n);
        for (bi, bb) in y.bags().iter().enumerate() {
            if bb.level != j {
                continue;
            }
            let vbb = bag_graph(&y, bi);
            seen.union_with(&vbb);
            let piece = if j == 0 {
                side_split(w, &vbb)?
            } else {
                let budget = child_budget(w, &vbb, k)?;
                split(w, &vbb, budget)?
            };
            pieces.push(complement_transfer(w.left(), &side_aligned(w.left(), piece)));
        }
        for v in &cover.difference(&seen) {
            pieces.push(singleton(n, v, w.left().contains(v)));
        }
        let merged = merge_components(cg, pieces)?;
        level_splits.push(complement_transfer(w.left(), &merged));
    }
    Ok(side_aligned(w.left(), refine_partition(w, &unions, &level_splits)?))
}

/// Split of a single vertex, aligned so its side decides the part index.
fn singleton(n: usize, v: usize, left: bool) -> TwoCosplit {
    let one = Bitset::from_iter(n, [v]);
    let (parts, part_certificates) = if left {
        (vec![one, Bitset::new(n)], vec![Cotree::single(v), Cotree::empty()])
    } else {
        (vec![Bitset::new(n), one], vec![Cotree::empty(), Cotree::single(v)])
    };
    TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates: Default::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosplit::{bipartite_size_bound, validate_two_cosplit};
    use crate::graph::generate::*;
    use crate::patterns::bipartite_index;

    fn check(b: &BipartiteGraph, t: usize) -> Option<TwoCosplit> {
        let s = match two_cosplit_bipartite(b, t, None) {
            Ok(s) => s,
            Err(Error::PatternFound { .. }) => return None,
            Err(e) => panic!("{e} on {b:?}"),
        };
        let k = bipartite_index(b).unwrap().0;
        let r = validate_two_cosplit(
            b.graph(),
            &s,
            Some(b.left()),
            Some(bipartite_size_bound(t, k)),
            Some(2 * k.max(1)),
        );
        assert!(r.ok(), "{:?} on {b:?}", r.errors);
        Some(s)
    }

    #[test]
    fn bicliques_and_stars() {
        let b = complete_bipartite(3, 2);
        let s = check(&b, 5).unwrap();
        assert_eq!(s.size(), 2);
        let star = complete_bipartite(1, 5);
        let s = check(&star, 5).unwrap();
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn half_graphs() {
        for k in 2..=4 {
            check(&half_graph(k).unwrap(), 6);
        }
    }

    #[test]
    fn random_bipartite_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        for _ in 0..300 {
            let b = random_bipartite_with(&mut rng, 6, 6, 0.5);
            if check(&b, 7).is_some() {
                checked += 1;
            }
        }
        assert!(checked > 30, "only {checked} instances");
    }
}
