//! Exact oracles for small graphs: clique number, chromatic number,
//! treedepth, degeneracy and homogeneous sets.

use std::collections::HashMap;

use super::{check_cap, SearchCaps};
use crate::bitset::Bitset;
use crate::error::Result;
use crate::graph::Graph;

/// A maximum clique, found by branch and bound with a greedy colouring bound.
pub fn maximum_clique(g: &Graph) -> Result<Bitset> {
    check_cap("clique host", g.n(), SearchCaps::default().clique)?;
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, g.all(), &mut best);
    Ok(Bitset::from_iter(g.n(), best))
}

fn expand(g: &Graph, current: &mut Vec<usize>, cand: Bitset, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // greedy colouring of the candidates; colour classes bound the clique size
    let mut order = Vec::with_capacity(cand.len());
    let mut uncoloured = cand.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut class = uncoloured.clone();
        while let Some(v) = class.first() {
            class.remove(v);
            class.difference_with(g.neighbors(v));
            uncoloured.remove(v);
            order.push((v, colour));
        }
    }
    let mut cand = cand;
    for &(v, c) in order.iter().rev() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        expand(g, current, cand.intersection(g.neighbors(v)), best);
        current.pop();
        cand.remove(v);
    }
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g)?.len())
}

pub fn maximum_independent_set(g: &Graph) -> Result<Bitset> {
    maximum_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(maximum_independent_set(g)?.len())
}

/// A maximum clique or maximum independent set, whichever is larger; ties go to the clique.
pub fn homogeneous_set(g: &Graph) -> Result<Bitset> {
    let clique = maximum_clique(g)?;
    let indep = maximum_independent_set(g)?;
    Ok(if indep.len() > clique.len() { indep } else { clique })
}

/// Exact chromatic number by backtracking colouring, testing `k = ω, ω+1, ...`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_cap("chromatic host", g.n(), SearchCaps::default().chromatic)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut k = clique_number(g)?.max(1);
    loop {
        let mut colours = vec![usize::MAX; g.n()];
        if colour_with(g, k, &mut colours, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

/// Colour the next uncoloured vertex with the most distinctly coloured neighbours.
fn colour_with(g: &Graph, k: usize, colours: &mut [usize], done: usize) -> bool {
    if done == g.n() {
        return true;
    }
    let v = (0..g.n())
        .filter(|&v| colours[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut used = 0u64;
            for w in g.neighbors(v) {
                if colours[w] != usize::MAX {
                    used |= 1 << colours[w];
                }
            }
            (used.count_ones(), g.degree(v))
        })
        .expect("uncoloured vertex");
    let mut used = 0u64;
    for w in g.neighbors(v) {
        if colours[w] != usize::MAX {
            used |= 1 << colours[w];
        }
    }
    // symmetry: never open more than one fresh colour
    let highest = colours.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |c| c + 1);
    for c in 0..k.min(highest + 1) {
        if used >> c & 1 == 0 {
            colours[v] = c;
            if colour_with(g, k, colours, done + 1) {
                return true;
            }
        }
    }
    colours[v] = usize::MAX;
    false
}

/// Exact treedepth (a single vertex has treedepth 1), memoised over vertex subsets.
pub fn treedepth(g: &Graph) -> Result<usize> {
    check_cap("treedepth host", g.n(), SearchCaps::default().treedepth)?;
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let all = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    let mut memo = HashMap::new();
    Ok(td(&adj, all, &mut memo))
}

fn components(adj: &[u32], set: u32) -> Vec<u32> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= adj[v] & set;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

fn td(adj: &[u32], set: u32, memo: &mut HashMap<u32, usize>) -> usize {
    match set.count_ones() {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    if let Some(&v) = memo.get(&set) {
        return v;
    }
    let comps = components(adj, set);
    let value = if comps.len() > 1 {
        comps.into_iter().map(|c| td(adj, c, memo)).max().unwrap_or(0)
    } else {
        // a clique needs exactly |set|; otherwise try every root
        let size = set.count_ones() as usize;
        let mut best = size;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = 1 + td(adj, set & !(1 << v), memo);
            best = best.min(sub);
            if best <= 2 {
                break;
            }
        }
        best
    };
    memo.insert(set, value);
    value
}

/// Degeneracy: the largest minimum degree met while repeatedly deleting a
/// minimum-degree vertex.
pub fn degeneracy(g: &Graph) -> usize {
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = g.all();
    let mut best = 0;
    while let Some(v) = alive.iter().min_by_key(|&v| degree[v]) {
        best = best.max(degree[v]);
        alive.remove(v);
        for w in g.neighbors(v) {
            if alive.contains(w) {
                degree[w] -= 1;
            }
        }
    }
    best
}

/// Number of vertices on a longest induced path.
pub fn longest_induced_path(g: &Graph) -> Result<usize> {
    check_cap("induced path host", g.n(), SearchCaps::default().treedepth)?;
    fn extend(g: &Graph, last: usize, forbidden: &Bitset, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for w in g.neighbors(last).difference(forbidden).iter() {
            // w may touch only `last` among the path vertices
            let mut next = forbidden.union(g.neighbors(last));
            next.insert(w);
            extend(g, w, &next, len + 1, best);
        }
    }
    let mut best = 0;
    for v in g.vertices() {
        let mut forbidden = Bitset::new(g.n());
        forbidden.insert(v);
        extend(g, v, &forbidden, 1, &mut best);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;

    #[test]
    fn classical_small_values() {
        let c5 = cycle(5).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
        assert_eq!(clique_number(&c5).unwrap(), 2);
        assert_eq!(degeneracy(&c5), 2);
        assert_eq!(treedepth(&path(4).unwrap()).unwrap(), 3);
        assert_eq!(treedepth(&Graph::new(1)).unwrap(), 1);
        assert_eq!(treedepth(&Graph::new(0)).unwrap(), 0);
        assert_eq!(treedepth(&complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&complete(6)).unwrap(), 6);
        assert_eq!(chromatic_number(&Graph::new(3)).unwrap(), 1);
        assert_eq!(chromatic_number(&cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(degeneracy(&complete(5)), 4);
    }

    #[test]
    fn longest_induced_paths() {
        assert_eq!(longest_induced_path(&path(6).unwrap()).unwrap(), 6);
        assert_eq!(longest_induced_path(&cycle(7).unwrap()).unwrap(), 6);
        assert_eq!(longest_induced_path(&complete(5)).unwrap(), 2);
        assert_eq!(longest_induced_path(&Graph::new(3)).unwrap(), 1);
    }

    #[test]
    fn treedepth_of_paths() {
        for h in 1..=4 {
            let p = path((1 << h) - 1).unwrap();
            assert_eq!(treedepth(&p).unwrap(), h);
        }
    }

    #[test]
    fn homogeneous_sets() {
        assert_eq!(homogeneous_set(&complete(5)).unwrap().len(), 5);
        let c5 = cycle(5).unwrap();
        let h = homogeneous_set(&c5).unwrap();
        assert_eq!(h.len(), 2);
        assert!(c5.is_clique(&h));
    }

    #[test]
    fn chromatic_matches_bipartiteness() {
        let g = complete_bipartite(3, 4).into_graph();
        assert_eq!(chromatic_number(&g).unwrap(), 2);
    }
}
