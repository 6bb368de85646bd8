//! Cosplits and 2-cosplits with certificates, their validators, the
//! operations used to combine them, and the size budgets of the constructions.

pub mod bipartite;
pub use bipartite::two_cosplit_bipartite;
pub mod general;
pub use general::two_cosplit;
pub mod induced;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::tree_model::{BiCotree, Cotree, TreeModelJson};



pub use induced::cosplit;

/// Partition into parts inducing cographs, each with a cotree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cosplit {
    pub parts: Vec<Bitset>,
    pub certificates: Vec<Cotree>,
}

impl Cosplit {
    pub fn size(&self) -> usize {
        self.parts.iter().filter(|p| !p.is_empty()).count()
    }

    pub fn height(&self) -> usize {
        self.certificates.iter().map(|c| c.height()).max().unwrap_or(0)
    }

    /// Drop empty parts.
    pub fn compact(self) -> Cosplit {
        let (parts, certificates) = self
            .parts
            .into_iter()
            .zip(self.certificates)
            .filter(|(p, _)| !p.is_empty())
            .unzip();
        Cosplit {
            parts,
            certificates,
        }
    }
}

/// Partition with a cotree per part and a bi-cotree per pair of parts; the
/// pair certificate for `(i, j)`, `i < j`, colors part `i` with 0 and part `j` with 1.
/// Parts may be empty while a split is being assembled; empty parts carry no pair certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCosplit {
    pub n: usize,
    pub parts: Vec<Bitset>,
    pub part_certificates: Vec<Cotree>,
    pub pair_certificates: BTreeMap<(usize, usize), BiCotree>,
}

impl TwoCosplit {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            parts: Vec::new(),
            part_certificates: Vec::new(),
            pair_certificates: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().filter(|p| !p.is_empty()).count()
    }

    pub fn height(&self) -> usize {
        let parts = self.part_certificates.iter().map(|c| c.height());
        let pairs = self.pair_certificates.values().map(|c| c.height());
        parts.chain(pairs).max().unwrap_or(0)
    }

    pub fn covered(&self) -> Bitset {
        let mut out = Bitset::new(self.n);
        for p in &self.parts {
            out.union_with(p);
        }
        out
    }

    /// Pair certificate for parts `i != j`, colored so that part `i` has color 0.
    pub fn pair(&self, i: usize, j: usize) -> Option<BiCotree> {
        let (lo, hi) = (i.min(j), i.max(j));
        let cert = self.pair_certificates.get(&(lo, hi))?;
        if i < j {
            Some(cert.clone())
        } else {
            let pi = &self.parts[i];
            Some(cert.recolored(|v| usize::from(!pi.contains(v))))
        }
    }

    /// Part index of every covered vertex.
    pub fn part_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p {
                out[v] = Some(i);
            }
        }
        out
    }

    /// Drop empty parts, renumbering pair certificates.
    pub fn compact(self) -> TwoCosplit {
        let keep: Vec<usize> = (0..self.parts.len()).filter(|&i| !self.parts[i].is_empty()).collect();
        let mut new_index = vec![usize::MAX; self.parts.len()];
        for (ni, &i) in keep.iter().enumerate() {
            new_index[i] = ni;
        }
        let pair_certificates = self
            .pair_certificates
            .into_iter()
            .filter(|((i, j), _)| new_index[*i] != usize::MAX && new_index[*j] != usize::MAX)
            .map(|((i, j), c)| ((new_index[i], new_index[j]), c))
            .collect();
        TwoCosplit {
            n: self.n,
            parts: keep.iter().map(|&i| self.parts[i].clone()).collect(),
            part_certificates: keep.iter().map(|&i| self.part_certificates[i].clone()).collect(),
            pair_certificates,
        }
    }

    /// Restriction to `keep`: parts intersected, certificates restricted.
    pub fn restrict(&self, keep: &Bitset) -> TwoCosplit {
        let parts: Vec<Bitset> = self.parts.iter().map(|p| p.intersection(keep)).collect();
        let part_certificates = self.part_certificates.iter().map(|c| c.induce(keep)).collect();
        let pair_certificates = self
            .pair_certificates
            .iter()
            .filter(|((i, j), _)| !parts[*i].is_empty() && !parts[*j].is_empty())
            .map(|(&k, c)| (k, c.induce(keep)))
            .collect();
        TwoCosplit {
            n: self.n,
            parts,
            part_certificates,
            pair_certificates,
        }
    }

    pub fn to_json(&self) -> TwoCosplitJson {
        TwoCosplitJson {
            size: self.size(),
            height: self.height(),
            parts: self.parts.iter().map(Bitset::to_vec).collect(),
            part_certificates: self.part_certificates.iter().map(|c| c.to_json()).collect(),
            pair_certificates: self
                .pair_certificates
                .iter()
                .map(|(&(i, j), c)| PairJson {
                    parts: [i, j],
                    certificate: c.to_json(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub parts: [usize; 2],
    pub certificate: TreeModelJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoCosplitJson {
    pub size: usize,
    pub height: usize,
    pub parts: Vec<Vec<usize>>,
    pub part_certificates: Vec<TreeModelJson>,
    pub pair_certificates: Vec<PairJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CosplitJson {
    pub size: usize,
    pub height: usize,
    pub parts: Vec<Vec<usize>>,
    pub certificates: Vec<TreeModelJson>,
}

impl Cosplit {
    pub fn to_json(&self) -> CosplitJson {
        CosplitJson {
            size: self.size(),
            height: self.height(),
            parts: self.parts.iter().map(Bitset::to_vec).collect(),
            certificates: self.certificates.iter().map(|c| c.to_json()).collect(),
        }
    }
}

/// Outcome of a validator: every failed check as a message.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub size: usize,
    pub height: usize,
    pub errors: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.errors.is_empty()
    }
}

fn check_partition(n: usize, parts: &[Bitset], errors: &mut Vec<String>) {
    let mut seen = Bitset::new(n);
    for (i, p) in parts.iter().enumerate() {
        if p.capacity() != n {
            errors.push(format!("part {i} has the wrong capacity"));
            return;
        }
        if let Some(v) = p.intersection(&seen).first() {
            errors.push(format!("vertex {v} lies in two parts"));
        }
        seen.union_with(p);
    }
    if seen.len() != n {
        errors.push(format!("parts cover {} of {n} vertices", seen.len()));
    }
}

fn check_bounds(
    report: &mut ValidationReport,
    size_bound: Option<u128>,
    height_bound: Option<usize>,
) {
    if let Some(b) = size_bound {
        if report.size as u128 > b {
            report.errors.push(format!("size {} exceeds bound {b}", report.size));
        }
    }
    if let Some(b) = height_bound {
        if report.height > b {
            report.errors.push(format!("height {} exceeds bound {b}", report.height));
        }
    }
}

/// Partition check, exact re-evaluation of every cotree, and optional bounds.
pub fn validate_cosplit(
    g: &Graph,
    s: &Cosplit,
    size_bound: Option<u128>,
    height_bound: Option<usize>,
) -> ValidationReport {
    let mut report = ValidationReport {
        size: s.size(),
        height: s.height(),
        errors: Vec::new(),
    };
    check_partition(g.n(), &s.parts, &mut report.errors);
    if s.parts.len() != s.certificates.len() {
        report.errors.push("one certificate per part required".into());
    }
    for (i, (p, c)) in s.parts.iter().zip(&s.certificates).enumerate() {
        if c.leaves() != p.to_vec() {
            report.errors.push(format!("certificate of part {i} has the wrong leaves"));
        } else if !c.defines_induced(g) {
            report.errors.push(format!("part {i} is not defined by its cotree"));
        }
    }
    check_bounds(&mut report, size_bound, height_bound);
    report
}

/// As [`validate_cosplit`] plus every pair certificate; with `sides`, parts must refine the sides.
pub fn validate_two_cosplit(
    g: &Graph,
    s: &TwoCosplit,
    sides: Option<&Bitset>,
    size_bound: Option<u128>,
    height_bound: Option<usize>,
) -> ValidationReport {
    let mut report = ValidationReport {
        size: s.size(),
        height: s.height(),
        errors: Vec::new(),
    };
    if s.n != g.n() {
        report.errors.push("split is over a different vertex count".into());
        return report;
    }
    check_partition(g.n(), &s.parts, &mut report.errors);
    if s.parts.len() != s.part_certificates.len() {
        report.errors.push("one certificate per part required".into());
        return report;
    }
    for (i, (p, c)) in s.parts.iter().zip(&s.part_certificates).enumerate() {
        if p.is_empty() {
            continue;
        }
        if let Some(left) = sides {
            if !p.is_subset(left) && p.intersects(left) {
                report.errors.push(format!("part {i} meets both sides"));
            }
        }
        if c.leaves() != p.to_vec() {
            report.errors.push(format!("certificate of part {i} has the wrong leaves"));
        } else if !c.defines_induced(g) {
            report.errors.push(format!("part {i} is not defined by its cotree"));
        }
    }
    for i in 0..s.parts.len() {
        for j in i + 1..s.parts.len() {
            if s.parts[i].is_empty() || s.parts[j].is_empty() {
                continue;
            }
            let Some(c) = s.pair_certificates.get(&(i, j)) else {
                report.errors.push(format!("pair ({i}, {j}) has no certificate"));
                continue;
            };
            let expected: Vec<(usize, usize)> = {
                let mut v: Vec<_> = s.parts[i]
                    .iter()
                    .map(|x| (x, 0))
                    .chain(s.parts[j].iter().map(|x| (x, 1)))
                    .collect();
                v.sort_unstable();
                v
            };
            if c.leaf_colors() != expected {
                report.errors.push(format!("pair ({i}, {j}) certificate has the wrong leaves"));
            } else if !c.defines_semi_induced(g) {
                report.errors.push(format!("pair ({i}, {j}) is not defined by its bi-cotree"));
            }
        }
    }
    check_bounds(&mut report, size_bound, height_bound);
    report
}

/// Size budget of the cosplit construction: `N_1 = 3`, `N_k = (2t-5) N_{k-1} + 2`.
pub fn cosplit_size_bound(t: usize, k: usize) -> u128 {
    let t = t.max(4) as u128;
    let mut n: u128 = if k == 0 { 1 } else { 3 };
    for _ in 1..k {
        n = n.saturating_mul(2 * t - 5).saturating_add(2);
    }
    n
}

/// The statement-level form `4 (2t-5)^{k-1}`.
pub fn cosplit_size_statement_bound(t: usize, k: usize) -> u128 {
    let t = t.max(4) as u128;
    4u128.saturating_mul((2 * t - 5).saturating_pow(k.saturating_sub(1) as u32))
}

/// Size budget of the bipartite construction: `N_1 = 2`, `N_k = t^{t+1} N_{k-1}^{t^2}`, saturating.
pub fn bipartite_size_bound(t: usize, k: usize) -> u128 {
    let t = t.max(5) as u32;
    let mut n: u128 = if k == 0 { 1 } else { 2 };
    for _ in 1..k {
        let factor = (t as u128).saturating_pow(t + 1);
        n = factor.saturating_mul(n.saturating_pow(t * t));
    }
    n
}

/// Size budget of the general construction: `N_0 · N_1^{N_0 - 1}`.
pub fn two_cosplit_size_bound(n0: u128, n1: u128) -> u128 {
    let e = u32::try_from(n0.saturating_sub(1)).unwrap_or(u32::MAX);
    n0.saturating_mul(n1.saturating_pow(e))
}

/// Aligned union of splits of pairwise non-adjacent vertex sets; certificates
/// gain one union level.
pub fn merge_components(g: &Graph, splits: Vec<TwoCosplit>) -> Result<TwoCosplit> {
    let n = g.n();
    let mut covered = Bitset::new(n);
    let mut sets = Vec::new();
    for s in &splits {
        if s.n != n {
            return Err(Error::InvalidParameter("splits over different vertex counts".into()));
        }
        let c = s.covered();
        if let Some(v) = c.intersection(&covered).first() {
            return Err(Error::Overlap(v));
        }
        covered.union_with(&c);
        sets.push(c);
    }
    for (a, sa) in sets.iter().enumerate() {
        for sb in &sets[a + 1..] {
            if sa.iter().any(|v| g.neighbors(v).intersects(sb)) {
                return Err(Error::InvalidParameter("merged components are adjacent".into()));
            }
        }
    }
    let size = splits.iter().map(|s| s.parts.len()).max().unwrap_or(0);
    let mut parts = vec![Bitset::new(n); size];
    let mut part_certs: Vec<Vec<Cotree>> = vec![Vec::new(); size];
    let mut pair_certs: BTreeMap<(usize, usize), Vec<BiCotree>> = BTreeMap::new();
    for s in splits {
        for (i, p) in s.parts.iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            parts[i].union_with(p);
            part_certs[i].push(s.part_certificates[i].clone());
        }
        for ((i, j), c) in s.pair_certificates {
            pair_certs.entry((i, j)).or_default().push(c);
        }
    }
    let part_certificates = part_certs.into_iter().map(Cotree::union).collect();
    let mut pair_certificates = BTreeMap::new();
    for i in 0..size {
        for j in i + 1..size {
            if parts[i].is_empty() || parts[j].is_empty() {
                continue;
            }
            let mut certs = pair_certs.remove(&(i, j)).unwrap_or_default();
            // components contributing to only one of the two parts still need leaves
            let mut have = Bitset::new(n);
            for c in &certs {
                for v in c.leaves() {
                    have.insert(v);
                }
            }
            let missing: Vec<(usize, usize)> = parts[i]
                .iter()
                .map(|v| (v, 0))
                .chain(parts[j].iter().map(|v| (v, 1)))
                .filter(|&(v, _)| !have.contains(v))
                .collect();
            if !missing.is_empty() {
                certs.push(BiCotree::flat(&missing, false));
            }
            pair_certificates.insert((i, j), BiCotree::union(certs));
        }
    }
    Ok(TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates,
    })
}

/// Reinterpret a split of a bipartite graph as a split of its bipartite
/// complement: pair certificates between opposite sides are complemented.
pub fn complement_transfer(left: &Bitset, s: &TwoCosplit) -> TwoCosplit {
    let mut out = s.clone();
    for (&(i, j), c) in out.pair_certificates.iter_mut() {
        let (pi, pj) = (&s.parts[i], &s.parts[j]);
        let opposite = pi.is_subset(left) != pj.is_subset(left);
        if opposite {
            *c = c.complemented();
        }
    }
    out
}

/// Coarsest common refinement of `coarse` and the parts of every split, each
/// split acting only on the vertices it covers. Returns the parts in order of
/// their smallest vertex.
pub fn common_refinement(n: usize, coarse: &[Bitset], splits: &[&TwoCosplit]) -> Vec<Bitset> {
    let mut signature: Vec<Vec<usize>> = vec![Vec::with_capacity(splits.len() + 1); n];
    for (i, p) in coarse.iter().enumerate() {
        for v in p {
            signature[v].push(i);
        }
    }
    for s in splits {
        let part_of = s.part_of();
        for v in 0..n {
            signature[v].push(part_of[v].unwrap_or(usize::MAX));
        }
    }
    let covered: Bitset = {
        let mut c = Bitset::new(n);
        for p in coarse {
            c.union_with(p);
        }
        c
    };
    let mut groups: HashMap<&Vec<usize>, usize> = HashMap::new();
    let mut parts: Vec<Bitset> = Vec::new();
    for v in &covered {
        let idx = *groups.entry(&signature[v]).or_insert_with(|| {
            parts.push(Bitset::new(n));
            parts.len() - 1
        });
        parts[idx].insert(v);
    }
    parts
}

/// Lemma-style refinement for bipartite graphs: `coarse` parts lie in single
/// sides and, for every pair of coarse parts on opposite sides, some split in
/// `splits` covers both. Certificates are restricted from the covering split.
pub fn refine_partition(
    b: &BipartiteGraph,
    coarse: &[Bitset],
    splits: &[TwoCosplit],
) -> Result<TwoCosplit> {
    let n = b.n();
    let left = b.left();
    let coarse: Vec<Bitset> = coarse.iter().filter(|p| !p.is_empty()).cloned().collect();
    for p in &coarse {
        if p.intersects(left) && !p.is_subset(left) {
            return Err(Error::InvalidParameter("coarse part meets both sides".into()));
        }
    }
    let covers: Vec<Bitset> = splits.iter().map(TwoCosplit::covered).collect();
    let refs: Vec<&TwoCosplit> = splits.iter().collect();
    let parts = common_refinement(n, &coarse, &refs);
    let coarse_of = |p: &Bitset| {
        let v = p.first().expect("nonempty");
        coarse.iter().position(|c| c.contains(v)).expect("covered")
    };
    let part_certificates = parts
        .iter()
        .map(|p| Cotree::edgeless(&p.to_vec()))
        .collect();
    let mut pair_certificates = BTreeMap::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (pi, pj) = (&parts[i], &parts[j]);
            let color = |v: usize| usize::from(!pi.contains(v));
            if pi.is_subset(left) == pj.is_subset(left) {
                let leaves: Vec<(usize, usize)> =
                    pi.iter().chain(pj.iter()).map(|v| (v, color(v))).collect();
                pair_certificates.insert((i, j), BiCotree::flat(&leaves, false));
                continue;
            }
            let both = coarse[coarse_of(pi)].union(&coarse[coarse_of(pj)]);
            let s = covers
                .iter()
                .position(|c| both.is_subset(c))
                .ok_or_else(|| Error::InvalidParameter("pair of coarse parts not covered".into()))?;
            let part_of = splits[s].part_of();
            let a = part_of[pi.first().expect("nonempty")].expect("covered");
            let c = part_of[pj.first().expect("nonempty")].expect("covered");
            if a == c {
                return Err(Error::Invariant("opposite-side parts share a split part".into()));
            }
            let cert = splits[s].pair(a, c).ok_or_else(|| Error::Invariant("missing pair certificate".into()))?;
            pair_certificates.insert((i, j), cert.induce(&pi.union(pj)).recolored(color));
        }
    }
    Ok(TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates,
    })
}

/// Trivial split of `b[set]` into its two sides, certified by recognition;
/// valid whenever `b[set]` is a bi-cograph.
pub(crate) fn side_split(b: &BipartiteGraph, set: &Bitset) -> Result<TwoCosplit> {
    let n = b.n();
    let l = set.intersection(b.left());
    let r = set.difference(b.left());
    let cert = crate::tree_model::build_bicotree_on(b, set)
        .ok_or_else(|| Error::Invariant("side split of a non-bi-cograph".into()))?;
    let mut pair_certificates = BTreeMap::new();
    if !l.is_empty() && !r.is_empty() {
        pair_certificates.insert((0, 1), cert);
    }
    Ok(TwoCosplit {
        n,
        part_certificates: vec![Cotree::edgeless(&l.to_vec()), Cotree::edgeless(&r.to_vec())],
        parts: vec![l, r],
        pair_certificates,
    })
}

/// Reorder the parts of a split of a bipartite graph so that parts in the
/// left side sit at even indices and parts in the right side at odd ones,
/// padding with empty parts. Aligned unions of such splits keep parts
/// inside single sides.
pub(crate) fn side_aligned(left: &Bitset, s: TwoCosplit) -> TwoCosplit {
    let n = s.n;
    let (mut nl, mut nr) = (0, 0);
    let mut index = vec![usize::MAX; s.parts.len()];
    for (i, p) in s.parts.iter().enumerate() {
        if p.is_empty() {
            continue;
        }
        if p.is_subset(left) {
            index[i] = 2 * nl;
            nl += 1;
        } else {
            index[i] = 2 * nr + 1;
            nr += 1;
        }
    }
    let size = (2 * nl).max(2 * nr).max(2);
    let mut parts = vec![Bitset::new(n); size];
    let mut part_certificates = vec![Cotree::empty(); size];
    for (i, (p, c)) in s.parts.iter().zip(&s.part_certificates).enumerate() {
        if index[i] != usize::MAX {
            parts[index[i]] = p.clone();
            part_certificates[index[i]] = c.clone();
        }
    }
    let mut pair_certificates = BTreeMap::new();
    for &(i, j) in s.pair_certificates.keys() {
        let (a, c) = (index[i], index[j]);
        if a == usize::MAX || c == usize::MAX {
            continue;
        }
        let (lo, hi) = (a.min(c), a.max(c));
        let cert = if a < c { s.pair(i, j) } else { s.pair(j, i) }.expect("present");
        pair_certificates.insert((lo, hi), cert);
    }
    TwoCosplit {
        n,
        parts,
        part_certificates,
        pair_certificates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;

    fn single_part(n: usize, part: &[usize], cert: Cotree) -> TwoCosplit {
        TwoCosplit {
            n,
            parts: vec![Bitset::from_iter(n, part.iter().copied())],
            part_certificates: vec![cert],
            pair_certificates: BTreeMap::new(),
        }
    }

    #[test]
    fn merge_two_triangles() {
        let g = complete(3).disjoint_union(&complete(3));
        let a = single_part(6, &[0, 1, 2], Cotree::clique(&[0, 1, 2]));
        let b = single_part(6, &[3, 4, 5], Cotree::clique(&[3, 4, 5]));
        let m = merge_components(&g, vec![a, b]).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.height(), 2);
        assert!(validate_two_cosplit(&g, &m, None, None, Some(2)).ok());
    }

    #[test]
    fn merge_singletons_is_edgeless() {
        let g = Graph::new(4);
        let splits = (0..4).map(|v| single_part(4, &[v], Cotree::single(v))).collect();
        let m = merge_components(&g, splits).unwrap();
        assert_eq!(m.size(), 1);
        assert!(validate_two_cosplit(&g, &m, None, None, Some(2)).ok());
    }

    #[test]
    fn merge_rejects_adjacent() {
        let g = path(2).unwrap();
        let splits = vec![single_part(2, &[0], Cotree::single(0)), single_part(2, &[1], Cotree::single(1))];
        assert!(merge_components(&g, splits).is_err());
    }

    #[test]
    fn transfer_biclique_to_edgeless() {
        let b = complete_bipartite(2, 2);
        let s = side_split(&b, &b.graph().all()).unwrap();
        let co = b.bipartite_complement();
        let t = complement_transfer(b.left(), &s);
        let r = validate_two_cosplit(co.graph(), &t, Some(b.left()), None, None);
        assert!(r.ok(), "{:?}", r.errors);
        assert_eq!(t.height(), s.height());
        let back = complement_transfer(b.left(), &t);
        assert!(validate_two_cosplit(b.graph(), &back, Some(b.left()), None, None).ok());
    }

    #[test]
    fn refine_by_bipartition_is_identity() {
        let b = half_graph(2).unwrap();
        let s = side_split(&b, &b.graph().all()).unwrap();
        let sides = vec![b.left().clone(), b.right()];
        let r = refine_partition(&b, &sides, std::slice::from_ref(&s)).unwrap();
        assert_eq!(r.parts, s.parts);
        assert!(validate_two_cosplit(b.graph(), &r, Some(b.left()), None, Some(s.height())).ok());
    }

    #[test]
    fn refine_three_coarse_parts() {
        // left {0,1}, right {2,3} and {4,5}; every cross pair is split by a side split
        let b = BipartiteGraph::from_sides(2, 4, &[(0, 0), (0, 1), (1, 1), (0, 2), (1, 3)]).unwrap();
        let n = b.n();
        let coarse = vec![
            Bitset::from_iter(n, [0, 1]),
            Bitset::from_iter(n, [2, 3]),
            Bitset::from_iter(n, [4, 5]),
        ];
        let splits: Vec<TwoCosplit> = [[0, 1, 2, 3], [0, 1, 4, 5]]
            .iter()
            .map(|s| side_split(&b, &Bitset::from_iter(n, s.iter().copied())).unwrap())
            .collect();
        let r = refine_partition(&b, &coarse, &splits).unwrap();
        assert!(r.size() <= 24);
        let rep = validate_two_cosplit(b.graph(), &r, Some(b.left()), Some(24), None);
        assert!(rep.ok(), "{:?}", rep.errors);
    }

    #[test]
    fn refine_rejects_mixed_parts() {
        let b = complete_bipartite(1, 1);
        assert!(refine_partition(&b, &[b.graph().all()], &[]).is_err());
    }

    #[test]
    fn size_bounds() {
        assert_eq!(cosplit_size_bound(5, 1), 3);
        assert_eq!(cosplit_size_bound(5, 2), 5 * 3 + 2);
        assert!(cosplit_size_bound(6, 3) <= cosplit_size_statement_bound(6, 3));
        assert_eq!(bipartite_size_bound(5, 1), 2);
        assert_eq!(two_cosplit_size_bound(1, 7), 1);
    }
}
