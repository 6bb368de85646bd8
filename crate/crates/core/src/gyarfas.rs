//! Gyárfás decompositions: rooted forests of vertex bags in which edges only
//! join comparable bags, every subtree is connected, root bags are singletons
//! and each non-root bag has a hook in its parent that sees the whole bag and
//! nothing strictly below it.

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bag {
    pub vertices: Bitset,
    pub parent: Option<usize>,
    pub hook: Option<usize>,
    pub level: usize,
}

/// Bags are stored parents-first; `children` is derived from `parent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GyarfasDecomposition {
    n: usize,
    bags: Vec<Bag>,
    children: Vec<Vec<usize>>,
}

/// How the initial vertex of each component is chosen.
#[derive(Clone, Debug)]
pub enum RootRule {
    /// Smallest vertex of the component.
    Smallest,
    /// Explicit roots, one per component.
    Explicit(Vec<usize>),
    /// Smallest vertex of the component inside the given set, else the smallest vertex.
    InSet(Bitset),
}

/// Decomposition of `g` with the smallest vertex of each component as root.
pub fn build(g: &Graph) -> GyarfasDecomposition {
    build_on(g, &g.all(), &RootRule::Smallest).expect("smallest roots always valid")
}

/// Decomposition of `g[set]`, keeping host vertex identifiers.
pub fn build_on(g: &Graph, set: &Bitset, rule: &RootRule) -> Result<GyarfasDecomposition> {
    let comps = g.components_within(set);
    let mut roots = Vec::with_capacity(comps.len());
    match rule {
        RootRule::Smallest => roots.extend(comps.iter().map(|c| c.first().expect("nonempty"))),
        RootRule::InSet(side) => roots.extend(comps.iter().map(|c| {
            c.intersection(side).first().unwrap_or_else(|| c.first().expect("nonempty"))
        })),
        RootRule::Explicit(given) => {
            for c in &comps {
                let mut inside = given.iter().filter(|&&r| r < g.n() && c.contains(r));
                match (inside.next(), inside.next()) {
                    (Some(&r), None) => roots.push(r),
                    (None, _) => {
                        return Err(Error::InvalidParameter(format!(
                            "no root given for the component of vertex {}",
                            c.first().expect("nonempty")
                        )))
                    }
                    (Some(_), Some(_)) => {
                        return Err(Error::InvalidParameter(format!(
                            "two roots given for the component of vertex {}",
                            c.first().expect("nonempty")
                        )))
                    }
                }
            }
            if let Some(&r) = given.iter().find(|&&r| r >= g.n() || !set.contains(r)) {
                return Err(Error::VertexOutOfRange { vertex: r, n: g.n() });
            }
        }
    }
    let mut bags = Vec::new();
    for (comp, root) in comps.into_iter().zip(roots) {
        let mut a = Bitset::new(g.n());
        a.insert(root);
        let mut rest = comp;
        rest.remove(root);
        // (bag, remaining vertices of its component, parent, hook, level)
        let mut queue = std::collections::VecDeque::from([(a, rest, None, None, 0usize)]);
        while let Some((a, rest, parent, hook, level)) = queue.pop_front() {
            let idx = bags.len();
            for c in g.components_within(&rest) {
                let pivot = a
                    .iter()
                    .find(|&v| g.neighbors(v).intersects(&c))
                    .expect("component attached to its bag");
                let child = c.intersection(g.neighbors(pivot));
                let below = c.difference(&child);
                queue.push_back((child, below, Some(idx), Some(pivot), level + 1));
            }
            bags.push(Bag {
                vertices: a,
                parent,
                hook,
                level,
            });
        }
    }
    Ok(GyarfasDecomposition::from_bags(g.n(), bags))
}

/// Which property of the definition fails, with the offending bag or edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Property 1: bags must be nonempty, disjoint and cover the vertices.
    NotPartition(String),
    /// Property 2.
    RootNotSingleton { bag: usize },
    /// Property 3.
    IncomparableEdge { u: usize, v: usize },
    /// Property 4.
    Disconnected { bag: usize },
    /// Property 5.
    Hook { bag: usize, reason: String },
}

impl Violation {
    pub fn property(&self) -> usize {
        match self {
            Violation::NotPartition(_) => 1,
            Violation::RootNotSingleton { .. } => 2,
            Violation::IncomparableEdge { .. } => 3,
            Violation::Disconnected { .. } => 4,
            Violation::Hook { .. } => 5,
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotPartition(s) => write!(f, "property 1: {s}"),
            Violation::RootNotSingleton { bag } => write!(f, "property 2: root bag {bag} is not a singleton"),
            Violation::IncomparableEdge { u, v } => {
                write!(f, "property 3: edge {u}-{v} joins incomparable bags")
            }
            Violation::Disconnected { bag } => {
                write!(f, "property 4: subtree of bag {bag} is disconnected")
            }
            Violation::Hook { bag, reason } => write!(f, "property 5: bag {bag}: {reason}"),
        }
    }
}

impl GyarfasDecomposition {
    /// Assemble from bags listed parents-first; levels are recomputed from parents.
    pub fn from_bags(n: usize, mut bags: Vec<Bag>) -> Self {
        let mut children = vec![Vec::new(); bags.len()];
        for i in 0..bags.len() {
            if let Some(p) = bags[i].parent {
                children[p].push(i);
                bags[i].level = bags[p].level + 1;
            } else {
                bags[i].level = 0;
            }
        }
        Self { n, bags, children }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bags(&self) -> &[Bag] {
        &self.bags
    }

    pub fn children(&self, bag: usize) -> &[usize] {
        &self.children[bag]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.bags.len()).filter(|&i| self.bags[i].parent.is_none())
    }

    /// Maximum bag level.
    pub fn height(&self) -> usize {
        self.bags.iter().map(|b| b.level).max().unwrap_or(0)
    }

    /// Union of the bags on level `i`.
    pub fn level_union(&self, i: usize) -> Bitset {
        let mut out = Bitset::new(self.n);
        for b in self.bags.iter().filter(|b| b.level == i) {
            out.union_with(&b.vertices);
        }
        out
    }

    /// Bag containing each vertex (`usize::MAX` if uncovered).
    pub fn bag_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.n];
        for (i, b) in self.bags.iter().enumerate() {
            for v in &b.vertices {
                out[v] = i;
            }
        }
        out
    }

    /// Union of a bag and all its descendants.
    pub fn subtree(&self, bag: usize) -> Bitset {
        let mut out = Bitset::new(self.n);
        let mut stack = vec![bag];
        while let Some(x) = stack.pop() {
            out.union_with(&self.bags[x].vertices);
            stack.extend(&self.children[x]);
        }
        out
    }

    fn is_ancestor(&self, anc: usize, mut x: usize) -> bool {
        loop {
            if x == anc {
                return true;
            }
            match self.bags[x].parent {
                Some(p) => x = p,
                None => return false,
            }
        }
    }

    /// Check the definition on `g[covered]` where `covered` is the union of the bags.
    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        self.validate_on(g, &g.all())
    }

    /// Check the definition for a decomposition of `g[set]`.
    pub fn validate_on(&self, g: &Graph, set: &Bitset) -> Result<(), Violation> {
        let mut covered = Bitset::new(g.n());
        for (i, b) in self.bags.iter().enumerate() {
            if b.vertices.is_empty() {
                return Err(Violation::NotPartition(format!("bag {i} is empty")));
            }
            if let Some(v) = b.vertices.intersection(&covered).first() {
                return Err(Violation::NotPartition(format!("vertex {v} lies in two bags")));
            }
            covered.union_with(&b.vertices);
            if let Some(p) = b.parent {
                if p >= i {
                    return Err(Violation::NotPartition(format!("bag {i} listed before its parent")));
                }
            }
        }
        if covered != *set {
            return Err(Violation::NotPartition("bags do not cover the vertex set".into()));
        }
        for i in self.roots() {
            if self.bags[i].vertices.len() != 1 {
                return Err(Violation::RootNotSingleton { bag: i });
            }
        }
        let bag_of = self.bag_of();
        for (u, v) in g.edges() {
            if !set.contains(u) || !set.contains(v) {
                continue;
            }
            let (a, b) = (bag_of[u], bag_of[v]);
            if !self.is_ancestor(a, b) && !self.is_ancestor(b, a) {
                return Err(Violation::IncomparableEdge { u, v });
            }
        }
        for i in 0..self.bags.len() {
            if !g.is_connected_within(&self.subtree(i)) {
                return Err(Violation::Disconnected { bag: i });
            }
        }
        for (i, b) in self.bags.iter().enumerate() {
            let Some(p) = b.parent else { continue };
            let hook_err = |reason: String| Err(Violation::Hook { bag: i, reason });
            let Some(h) = b.hook else {
                return hook_err("missing hook".into());
            };
            if !self.bags[p].vertices.contains(h) {
                return hook_err(format!("hook {h} not in the parent bag"));
            }
            if let Some(v) = b.vertices.difference(g.neighbors(h)).first() {
                return hook_err(format!("hook {h} misses bag vertex {v}"));
            }
            let strict = self.subtree(i).difference(&b.vertices);
            if let Some(v) = strict.intersection(g.neighbors(h)).first() {
                return hook_err(format!("hook {h} sees descendant vertex {v}"));
            }
        }
        Ok(())
    }

    /// Hooks along the root-to-`bag` chain followed by the smallest vertex of `bag`.
    /// In a valid decomposition these vertices induce a path.
    pub fn hook_path(&self, bag: usize) -> Vec<usize> {
        let mut path = vec![self.bags[bag].vertices.first().expect("nonempty bag")];
        let mut x = bag;
        while let Some(p) = self.bags[x].parent {
            path.push(self.bags[x].hook.expect("non-root bag has a hook"));
            x = p;
        }
        path.reverse();
        path
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            n: self.n,
            height: self.height(),
            bags: self
                .bags
                .iter()
                .map(|b| BagJson {
                    vertices: b.vertices.to_vec(),
                    parent: b.parent,
                    hook: b.hook,
                    level: b.level,
                })
                .collect(),
        }
    }

    /// DOT with one cluster per bag and hook edges to the child bags.
    pub fn to_dot(&self, g: &Graph) -> String {
        let mut out = String::from("graph Y {\n  compound=true;\n");
        for (i, b) in self.bags.iter().enumerate() {
            out.push_str(&format!(
                "  subgraph cluster_{i} {{\n    label=\"bag {i} (level {})\";\n",
                b.level
            ));
            for v in &b.vertices {
                out.push_str(&format!("    {v};\n"));
            }
            out.push_str("  }\n");
        }
        for (u, v) in g.edges() {
            out.push_str(&format!("  {u} -- {v} [color=gray];\n"));
        }
        for b in &self.bags {
            if let Some(h) = b.hook {
                let v = b.vertices.first().expect("nonempty bag");
                out.push_str(&format!("  {h} -- {v} [style=bold];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BagJson {
    pub vertices: Vec<usize>,
    pub parent: Option<usize>,
    pub hook: Option<usize>,
    pub level: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub n: usize,
    pub height: usize,
    pub bags: Vec<BagJson>,
}

/// Every bag independent, and within each tree the bags of one level parity
/// lie on a single side, the other parity on the other side.
pub fn bipartite_levels_check(b: &BipartiteGraph, y: &GyarfasDecomposition) -> bool {
    let g = b.graph();
    let mut root_side = vec![None; y.bags().len()];
    for (i, bag) in y.bags().iter().enumerate() {
        if !g.is_independent(&bag.vertices) {
            return false;
        }
        let side = match bag.parent {
            None => {
                let v = bag.vertices.first().expect("nonempty bag");
                b.side(v)
            }
            Some(p) => root_side[p].expect("parent seen first"),
        };
        root_side[i] = Some(side);
        let expected = if bag.level % 2 == 0 { side } else { side.other() };
        if bag.vertices.iter().any(|v| b.side(v) != expected) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use crate::patterns::{check_induced_witness, Mode, PatternWitness};

    #[test]
    fn path_from_endpoint_is_a_chain() {
        let p5 = path(5).unwrap();
        let y = build(&p5);
        assert_eq!(y.height(), 4);
        assert!(y.bags().iter().all(|b| b.vertices.len() == 1));
        y.validate(&p5).unwrap();
        let deepest = (0..y.bags().len()).max_by_key(|&i| y.bags()[i].level).unwrap();
        assert_eq!(y.hook_path(deepest), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn star_and_clique() {
        let star = complete_bipartite(1, 4).into_graph();
        let y = build(&star);
        assert_eq!(y.height(), 1);
        assert_eq!(y.level_union(1).to_vec(), vec![1, 2, 3, 4]);

        let k5 = complete(5);
        let y = build_on(&k5, &k5.all(), &RootRule::Explicit(vec![2])).unwrap();
        assert_eq!(y.height(), 1);
        assert_eq!(y.bags()[0].vertices.to_vec(), vec![2]);
        assert_eq!(y.bags()[1].vertices.len(), 4);
        let level1 = y.roots().flat_map(|r| y.children(r).to_vec()).next().unwrap();
        assert_eq!(y.hook_path(level1).len(), 2);
    }

    #[test]
    fn detects_violations() {
        let p3 = path(3).unwrap();
        // vertex 0 is not covered
        let bags = vec![
            Bag { vertices: Bitset::from_iter(3, [2]), parent: None, hook: None, level: 0 },
            Bag { vertices: Bitset::from_iter(3, [1]), parent: Some(0), hook: Some(2), level: 1 },
        ];
        let y = GyarfasDecomposition::from_bags(3, bags);
        assert_eq!(y.validate(&p3).unwrap_err().property(), 1);

        let c4 = cycle(4).unwrap();
        let bags = vec![
            Bag { vertices: Bitset::from_iter(4, [0]), parent: None, hook: None, level: 0 },
            Bag { vertices: Bitset::from_iter(4, [1]), parent: Some(0), hook: Some(0), level: 1 },
            Bag { vertices: Bitset::from_iter(4, [3]), parent: Some(0), hook: Some(0), level: 1 },
            Bag { vertices: Bitset::from_iter(4, [2]), parent: Some(1), hook: Some(1), level: 2 },
        ];
        let y = GyarfasDecomposition::from_bags(4, bags);
        assert_eq!(y.validate(&c4).unwrap_err().property(), 3);

        // hook 0 misses vertex 2 of the bag {1, 2}
        let p3 = path(3).unwrap();
        let bags = vec![
            Bag { vertices: Bitset::from_iter(3, [0]), parent: None, hook: None, level: 0 },
            Bag { vertices: Bitset::from_iter(3, [1, 2]), parent: Some(0), hook: Some(0), level: 1 },
        ];
        let y = GyarfasDecomposition::from_bags(3, bags);
        assert_eq!(y.validate(&p3).unwrap_err().property(), 5);
    }

    #[test]
    fn bipartite_levels() {
        let h3 = half_graph(3).unwrap();
        let y = build_on(h3.graph(), &h3.graph().all(), &RootRule::InSet(h3.left().clone())).unwrap();
        y.validate(h3.graph()).unwrap();
        assert!(bipartite_levels_check(&h3, &y));

        // C6 with adjacent vertices 0 and 1 forced into one bag
        let c6 = BipartiteGraph::new(cycle(6).unwrap(), Bitset::from_iter(6, [0, 2, 4])).unwrap();
        let bags = vec![
            Bag { vertices: Bitset::from_iter(6, [2]), parent: None, hook: None, level: 0 },
            Bag { vertices: Bitset::from_iter(6, [0, 1, 3, 4, 5]), parent: Some(0), hook: Some(2), level: 1 },
        ];
        let y = GyarfasDecomposition::from_bags(6, bags);
        assert!(!bipartite_levels_check(&c6, &y));
    }

    #[test]
    fn hook_paths_are_induced() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let g = random_connected_with(&mut rng, 12, 0.2);
            let y = build(&g);
            y.validate(&g).unwrap();
            for i in 0..y.bags().len() {
                let p = y.hook_path(i);
                let pat = path(p.len()).unwrap();
                let w = PatternWitness { mapping: p, mode: Mode::Induced };
                check_induced_witness(&g, &pat, &w).unwrap();
            }
        }
    }

    #[test]
    fn explicit_root_errors() {
        let g = path(3).unwrap();
        assert!(build_on(&g, &g.all(), &RootRule::Explicit(vec![])).is_err());
        assert!(build_on(&g, &g.all(), &RootRule::Explicit(vec![0, 1])).is_err());
    }
}
