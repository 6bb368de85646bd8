//! Colored tree models: rooted trees whose leaves are graph vertices, where
//! two leaves are adjacent iff the rule at their lowest common ancestor fires
//! on their colors. Cotrees use one color, bi-cotrees color leaves by side.

use std::collections::{BTreeSet, HashMap};
use std::ops::Deref;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

/// Symmetric color-pair rule; pairs are stored as `(min, max)` and absent pairs are 0.
pub type Rule = BTreeSet<(usize, usize)>;

fn pair(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf { vertex: usize, color: usize },
    Internal { children: Vec<usize>, rule: Rule },
}

/// A `k`-colored tree model stored as an arena. The root is always internal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeModel {
    colors: usize,
    nodes: Vec<Node>,
    root: usize,
}

impl TreeModel {
    /// Model of the empty graph: a root without children.
    pub fn empty(colors: usize) -> Self {
        Self {
            colors,
            nodes: vec![Node::Internal {
                children: Vec::new(),
                rule: Rule::new(),
            }],
            root: 0,
        }
    }

    /// A root with a single leaf (height 1).
    pub fn single(colors: usize, vertex: usize, color: usize) -> Self {
        Self {
            colors,
            nodes: vec![
                Node::Internal {
                    children: vec![1],
                    rule: Rule::new(),
                },
                Node::Leaf { vertex, color },
            ],
            root: 0,
        }
    }

    /// A root with the given rule over one leaf per `(vertex, color)` (height 1, or 0 if empty).
    pub fn flat(colors: usize, leaves: &[(usize, usize)], rule: Rule) -> Self {
        let mut nodes = vec![Node::Internal {
            children: (1..=leaves.len()).collect(),
            rule,
        }];
        nodes.extend(leaves.iter().map(|&(vertex, color)| Node::Leaf { vertex, color }));
        Self {
            colors,
            nodes,
            root: 0,
        }
    }

    /// Build from nodes; checks colors, rule symmetry storage, distinct leaf vertices and tree shape.
    pub fn from_nodes(colors: usize, nodes: Vec<Node>, root: usize) -> Result<Self> {
        let m = Self {
            colors,
            nodes,
            root,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let bad = |s: String| Err(Error::Malformed(s));
        if self.root >= self.nodes.len() {
            return bad("root out of range".into());
        }
        if matches!(self.nodes[self.root], Node::Leaf { .. }) {
            return bad("root must be internal".into());
        }
        let mut visited = vec![false; self.nodes.len()];
        let mut seen_vertices = BTreeSet::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            if visited[x] {
                return bad(format!("node {x} reachable twice"));
            }
            visited[x] = true;
            match &self.nodes[x] {
                Node::Leaf { vertex, color } => {
                    if *color >= self.colors {
                        return bad(format!("leaf color {color} outside 0..{}", self.colors));
                    }
                    if !seen_vertices.insert(*vertex) {
                        return bad(format!("vertex {vertex} appears on two leaves"));
                    }
                }
                Node::Internal { children, rule } => {
                    for &(a, b) in rule {
                        if a > b || b >= self.colors {
                            return bad(format!("rule entry ({a},{b}) invalid"));
                        }
                    }
                    for &c in children {
                        if c >= self.nodes.len() {
                            return bad(format!("child {c} out of range"));
                        }
                        stack.push(c);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, x: usize) -> &Node {
        &self.nodes[x]
    }

    pub fn children(&self, x: usize) -> &[usize] {
        match &self.nodes[x] {
            Node::Internal { children, .. } => children,
            Node::Leaf { .. } => &[],
        }
    }

    pub fn rule(&self, x: usize) -> Option<&Rule> {
        match &self.nodes[x] {
            Node::Internal { rule, .. } => Some(rule),
            Node::Leaf { .. } => None,
        }
    }

    /// Host vertices on the leaves, sorted.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            match &self.nodes[x] {
                Node::Leaf { vertex, .. } => out.push(*vertex),
                Node::Internal { children, .. } => stack.extend(children),
            }
        }
        out.sort_unstable();
        out
    }

    /// `(vertex, color)` for every leaf.
    pub fn leaf_colors(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            match &self.nodes[x] {
                Node::Leaf { vertex, color } => out.push((*vertex, *color)),
                Node::Internal { children, .. } => stack.extend(children),
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of edges on a longest root-to-leaf path.
    pub fn height(&self) -> usize {
        fn go(m: &TreeModel, x: usize) -> usize {
            match &m.nodes[x] {
                Node::Leaf { .. } => 0,
                Node::Internal { children, .. } => {
                    children.iter().map(|&c| 1 + go(m, c)).max().unwrap_or(0)
                }
            }
        }
        go(self, self.root)
    }

    /// Adjacent host-vertex pairs `(u, v)`, `u < v`, defined by the model.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        fn go(m: &TreeModel, x: usize, out: &mut Vec<(usize, usize)>) -> Vec<(usize, usize)> {
            match &m.nodes[x] {
                Node::Leaf { vertex, color } => vec![(*vertex, *color)],
                Node::Internal { children, rule } => {
                    let mut acc: Vec<(usize, usize)> = Vec::new();
                    for &c in children {
                        let sub = go(m, c, out);
                        if !rule.is_empty() {
                            for &(u, cu) in &acc {
                                for &(v, cv) in &sub {
                                    if rule.contains(&pair(cu, cv)) {
                                        out.push((u.min(v), u.max(v)));
                                    }
                                }
                            }
                        }
                        acc.extend(sub);
                    }
                    acc
                }
            }
        }
        let mut out = Vec::new();
        go(self, self.root, &mut out);
        out.sort_unstable();
        out
    }

    /// The defined graph on host vertices `0..n`; vertices without a leaf stay isolated.
    pub fn evaluate_on(&self, n: usize) -> Result<Graph> {
        Graph::from_edges(n, self.edges())
    }

    /// The defined graph; leaf vertices must be exactly `0..|L(T)|`.
    pub fn evaluate(&self) -> Result<Graph> {
        let leaves = self.leaves();
        if leaves.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::Malformed("leaf vertices are not 0..n".into()));
        }
        self.evaluate_on(leaves.len())
    }

    /// Whether the model defines exactly `g[leaves]`.
    pub fn defines_induced(&self, g: &Graph) -> bool {
        let leaves = self.leaves();
        if leaves.last().is_some_and(|&v| v >= g.n()) {
            return false;
        }
        let mut count = 0;
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return false;
            }
            count += 1;
        }
        let set = Bitset::from_iter(g.n(), leaves.iter().copied());
        let expected: usize = leaves
            .iter()
            .map(|&v| g.neighbors(v).intersection_len(&set))
            .sum::<usize>()
            / 2;
        count == expected
    }

    /// Whether the model defines the cross edges of `g` between leaves colored
    /// 0 and leaves colored 1, and nothing else.
    pub fn defines_semi_induced(&self, g: &Graph) -> bool {
        let lc = self.leaf_colors();
        if lc.iter().any(|&(v, c)| v >= g.n() || c > 1) {
            return false;
        }
        let color: HashMap<usize, usize> = lc.iter().copied().collect();
        let mut count = 0;
        for (u, v) in self.edges() {
            if color[&u] == color[&v] || !g.has_edge(u, v) {
                return false;
            }
            count += 1;
        }
        let zero = Bitset::from_iter(g.n(), lc.iter().filter(|p| p.1 == 0).map(|p| p.0));
        let one = Bitset::from_iter(g.n(), lc.iter().filter(|p| p.1 == 1).map(|p| p.0));
        let expected: usize = zero.iter().map(|v| g.neighbors(v).intersection_len(&one)).sum();
        count == expected
    }

    /// Combine models under a new root with `rule`. Empty children are dropped,
    /// single-leaf roots become plain leaves, and children whose root carries the
    /// same rule are spliced in. A lone internal child becomes the result.
    pub fn compose(colors: usize, rule: Rule, parts: Vec<TreeModel>) -> TreeModel {
        let mut nodes = vec![Node::Internal {
            children: Vec::new(),
            rule: rule.clone(),
        }];
        let mut top = Vec::new();
        for p in parts {
            assert_eq!(p.colors, colors, "color counts differ");
            let offset = nodes.len();
            let root_children = p.children(p.root).to_vec();
            let root_rule = p.rule(p.root).cloned().unwrap_or_default();
            let splice = root_children.len() <= 1 || root_rule == rule;
            for node in p.nodes {
                nodes.push(match node {
                    Node::Internal { children, rule } => Node::Internal {
                        children: children.into_iter().map(|c| c + offset).collect(),
                        rule,
                    },
                    leaf => leaf,
                });
            }
            if splice {
                top.extend(root_children.into_iter().map(|c| c + offset));
            } else {
                top.push(p.root + offset);
            }
        }
        if top.len() == 1 && matches!(nodes[top[0]], Node::Internal { .. }) {
            let root = top[0];
            return TreeModel { colors, nodes, root }.compacted();
        }
        nodes[0] = Node::Internal {
            children: top,
            rule,
        };
        TreeModel {
            colors,
            nodes,
            root: 0,
        }
        .compacted()
    }

    /// Drop unreachable arena slots.
    fn compacted(self) -> TreeModel {
        let mut map = vec![usize::MAX; self.nodes.len()];
        let mut order = Vec::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            map[x] = order.len();
            order.push(x);
            stack.extend(self.children(x).iter().rev());
        }
        let nodes = order
            .iter()
            .map(|&x| match &self.nodes[x] {
                Node::Internal { children, rule } => Node::Internal {
                    children: children.iter().map(|&c| map[c]).collect(),
                    rule: rule.clone(),
                },
                leaf => leaf.clone(),
            })
            .collect();
        TreeModel {
            colors: self.colors,
            nodes,
            root: 0,
        }
    }

    /// Restriction to the leaves whose vertex is in `keep`: empty subtrees are
    /// pruned and non-root internal nodes with one child are contracted.
    pub fn induce_model(&self, keep: &Bitset) -> TreeModel {
        fn go(m: &TreeModel, x: usize, keep: &Bitset, out: &mut Vec<Node>) -> Option<usize> {
            match &m.nodes[x] {
                Node::Leaf { vertex, .. } => {
                    if *vertex < keep.capacity() && keep.contains(*vertex) {
                        out.push(m.nodes[x].clone());
                        Some(out.len() - 1)
                    } else {
                        None
                    }
                }
                Node::Internal { children, rule } => {
                    let kept: Vec<usize> =
                        children.iter().filter_map(|&c| go(m, c, keep, out)).collect();
                    match kept.len() {
                        0 => None,
                        1 => Some(kept[0]),
                        _ => {
                            out.push(Node::Internal {
                                children: kept,
                                rule: rule.clone(),
                            });
                            Some(out.len() - 1)
                        }
                    }
                }
            }
        }
        let mut nodes = Vec::new();
        let root = match go(self, self.root, keep, &mut nodes) {
            None => return TreeModel::empty(self.colors),
            Some(r) => r,
        };
        if let Node::Leaf { .. } = nodes[root] {
            nodes.push(Node::Internal {
                children: vec![root],
                rule: Rule::new(),
            });
            let root = nodes.len() - 1;
            return TreeModel {
                colors: self.colors,
                nodes,
                root,
            }
            .compacted();
        }
        TreeModel {
            colors: self.colors,
            nodes,
            root,
        }
        .compacted()
    }

    /// Same tree and rules with leaf colors reassigned by `color_of(vertex)`.
    pub fn recolored(&self, colors: usize, color_of: impl Fn(usize) -> usize) -> TreeModel {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                Node::Leaf { vertex, .. } => Node::Leaf {
                    vertex: *vertex,
                    color: color_of(*vertex),
                },
                other => other.clone(),
            })
            .collect();
        TreeModel {
            colors,
            nodes,
            root: self.root,
        }
    }

    /// Same tree with every rule replaced by `f(old_rule)`.
    pub fn map_rules(&self, colors: usize, f: impl Fn(&Rule) -> Rule) -> TreeModel {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                Node::Internal { children, rule } => Node::Internal {
                    children: children.clone(),
                    rule: f(rule),
                },
                leaf => leaf.clone(),
            })
            .collect();
        TreeModel {
            colors,
            nodes,
            root: self.root,
        }
    }

    /// Same tree with leaf vertices renamed by `rename`.
    pub fn relabeled(&self, rename: impl Fn(usize) -> usize) -> TreeModel {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                Node::Leaf { vertex, color } => Node::Leaf {
                    vertex: rename(*vertex),
                    color: *color,
                },
                other => other.clone(),
            })
            .collect();
        TreeModel {
            colors: self.colors,
            nodes,
            root: self.root,
        }
    }
}

/// Rule of a cotree join node.
pub fn join_rule() -> Rule {
    Rule::from([(0, 0)])
}

/// Rule of a bi-cotree bipartite-join node.
pub fn bijoin_rule() -> Rule {
    Rule::from([(0, 1)])
}

/// One-colored tree model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree(TreeModel);

/// Two-colored tree model whose rules never fire on equal colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiCotree(TreeModel);

impl Deref for Cotree {
    type Target = TreeModel;
    fn deref(&self) -> &TreeModel {
        &self.0
    }
}

impl Deref for BiCotree {
    type Target = TreeModel;
    fn deref(&self) -> &TreeModel {
        &self.0
    }
}

impl Cotree {
    pub fn new(m: TreeModel) -> Result<Self> {
        if m.colors != 1 {
            return Err(Error::Malformed("a cotree uses exactly one color".into()));
        }
        Ok(Self(m))
    }

    pub fn into_inner(self) -> TreeModel {
        self.0
    }

    pub fn empty() -> Self {
        Self(TreeModel::empty(1))
    }

    pub fn single(v: usize) -> Self {
        Self(TreeModel::single(1, v, 0))
    }

    /// Edgeless graph on `vertices` (height 1).
    pub fn edgeless(vertices: &[usize]) -> Self {
        Self::flat(vertices, false)
    }

    /// Complete graph on `vertices` (height 1).
    pub fn clique(vertices: &[usize]) -> Self {
        Self::flat(vertices, true)
    }

    fn flat(vertices: &[usize], join: bool) -> Self {
        let leaves: Vec<_> = vertices.iter().map(|&v| (v, 0)).collect();
        let rule = if join { join_rule() } else { Rule::new() };
        Self(TreeModel::flat(1, &leaves, rule))
    }

    pub fn union(parts: Vec<Cotree>) -> Self {
        Self(TreeModel::compose(1, Rule::new(), parts.into_iter().map(|c| c.0).collect()))
    }

    pub fn join(parts: Vec<Cotree>) -> Self {
        Self(TreeModel::compose(1, join_rule(), parts.into_iter().map(|c| c.0).collect()))
    }

    pub fn induce(&self, keep: &Bitset) -> Cotree {
        Cotree(self.0.induce_model(keep))
    }

    /// The bi-cotree of the graph semi-induced by `a` and `b` (colors 0 and 1).
    /// Leaves outside `a ∪ b` are removed first; the tree is otherwise kept.
    pub fn semi_induce_model(&self, a: &Bitset, b: &Bitset) -> Result<BiCotree> {
        if let Some(v) = a.intersection(b).first() {
            return Err(Error::Overlap(v));
        }
        let keep = a.union(b);
        let restricted = if self.leaves().iter().all(|&v| v < keep.capacity() && keep.contains(v)) {
            self.0.clone()
        } else {
            self.0.induce_model(&keep)
        };
        let recolored = restricted.recolored(2, |v| usize::from(!a.contains(v)));
        Ok(BiCotree(recolored.map_rules(2, |r| {
            if r.contains(&(0, 0)) {
                bijoin_rule()
            } else {
                Rule::new()
            }
        })))
    }
}

impl BiCotree {
    pub fn new(m: TreeModel) -> Result<Self> {
        if m.colors != 2 {
            return Err(Error::Malformed("a bi-cotree uses exactly two colors".into()));
        }
        let mut stack = vec![m.root];
        while let Some(x) = stack.pop() {
            if let Some(r) = m.rule(x) {
                if r.contains(&(0, 0)) || r.contains(&(1, 1)) {
                    return Err(Error::Malformed("bi-cotree rule fires within a side".into()));
                }
            }
            stack.extend(m.children(x));
        }
        Ok(Self(m))
    }

    pub fn into_inner(self) -> TreeModel {
        self.0
    }

    pub fn empty() -> Self {
        Self(TreeModel::empty(2))
    }

    /// Union (`join = false`) or bipartite join of flat leaves `(vertex, color)`.
    pub fn flat(leaves: &[(usize, usize)], join: bool) -> Self {
        let rule = if join { bijoin_rule() } else { Rule::new() };
        Self(TreeModel::flat(2, leaves, rule))
    }

    pub fn union(parts: Vec<BiCotree>) -> Self {
        Self(TreeModel::compose(2, Rule::new(), parts.into_iter().map(|c| c.0).collect()))
    }

    pub fn join(parts: Vec<BiCotree>) -> Self {
        Self(TreeModel::compose(2, bijoin_rule(), parts.into_iter().map(|c| c.0).collect()))
    }

    pub fn induce(&self, keep: &Bitset) -> BiCotree {
        BiCotree(self.0.induce_model(keep))
    }

    /// Recolor leaves, e.g. to match the side order of a different pair.
    pub fn recolored(&self, color_of: impl Fn(usize) -> usize) -> BiCotree {
        BiCotree(self.0.recolored(2, color_of))
    }

    /// Swap bipartite union and bipartite join at every node; the result defines
    /// the bipartite complement with respect to the leaf colors.
    pub fn complemented(&self) -> BiCotree {
        BiCotree(self.0.map_rules(2, |r| {
            if r.contains(&(0, 1)) {
                Rule::new()
            } else {
                bijoin_rule()
            }
        }))
    }

    /// A cotree `H` on the same tree with `H[A, B]` equal to this bi-cotree's graph.
    pub fn to_cotree(&self) -> Cotree {
        let recolored = self.0.recolored(1, |_| 0);
        Cotree(recolored.map_rules(1, |r| {
            if r.contains(&(0, 1)) {
                join_rule()
            } else {
                Rule::new()
            }
        }))
    }
}

/// Cotree of `g[set]` by the canonical recursion: components of a disconnected
/// graph under a union node, co-components of a disconnected complement under
/// a join node. `None` if `g[set]` is not a cograph.
pub fn build_cotree_on(g: &Graph, set: &Bitset) -> Option<Cotree> {
    match set.len() {
        0 => return Some(Cotree::empty()),
        1 => return Some(Cotree::single(set.first().expect("one vertex"))),
        _ => {}
    }
    let comps = g.components_within(set);
    if comps.len() > 1 {
        let parts = comps.iter().map(|c| build_cotree_on(g, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::union(parts));
    }
    let cocomps = g.co_components_within(set);
    if cocomps.len() > 1 {
        let parts = cocomps.iter().map(|c| build_cotree_on(g, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::join(parts));
    }
    None
}

pub fn build_cotree(g: &Graph) -> Option<Cotree> {
    build_cotree_on(g, &g.all())
}

/// Minimum-height bi-cotree. At every set the finest split into components
/// (union) or bipartite-complement components (join) is tried; height is
/// monotone under taking induced subgraphs, so finest splits suffice.
pub fn build_bicotree(b: &BipartiteGraph) -> Option<BiCotree> {
    build_bicotree_on(b, &Bitset::full(b.n()))
}

pub fn build_bicotree_on(b: &BipartiteGraph, set: &Bitset) -> Option<BiCotree> {
    let co = b.bipartite_complement();
    let mut memo = HashMap::new();
    let color = |v: usize| b.side(v).color();
    match set.len() {
        0 => return Some(BiCotree::empty()),
        1 => {
            let v = set.first().expect("one vertex");
            return Some(BiCotree(TreeModel::single(2, v, color(v))));
        }
        _ => {}
    }
    bi_height(b.graph(), co.graph(), set, &mut memo)?;
    Some(bi_assemble(b.graph(), co.graph(), set, &memo, &color))
}

#[derive(Clone, Copy)]
enum Split {
    Leaf,
    Union,
    Join,
}

fn bi_height(
    g: &Graph,
    co: &Graph,
    set: &Bitset,
    memo: &mut HashMap<Bitset, Option<(usize, Split)>>,
) -> Option<usize> {
    if set.len() == 1 {
        return Some(0);
    }
    if let Some(&r) = memo.get(set) {
        return r.map(|(h, _)| h);
    }
    let mut best: Option<(usize, Split)> = None;
    for (graph, kind) in [(g, Split::Union), (co, Split::Join)] {
        let comps = graph.components_within(set);
        if comps.len() < 2 {
            continue;
        }
        let mut worst = 0;
        let mut ok = true;
        for c in &comps {
            match bi_height(g, co, c, memo) {
                Some(h) => worst = worst.max(h),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && best.map_or(true, |(h, _)| worst + 1 < h) {
            best = Some((worst + 1, kind));
        }
    }
    memo.insert(set.clone(), best);
    best.map(|(h, _)| h)
}

fn bi_assemble(
    g: &Graph,
    co: &Graph,
    set: &Bitset,
    memo: &HashMap<Bitset, Option<(usize, Split)>>,
    color: &dyn Fn(usize) -> usize,
) -> BiCotree {
    let split = if set.len() == 1 {
        Split::Leaf
    } else {
        memo[set].expect("recognised set").1
    };
    match split {
        Split::Leaf => {
            let v = set.first().expect("one vertex");
            BiCotree(TreeModel::single(2, v, color(v)))
        }
        Split::Union | Split::Join => {
            let graph = if matches!(split, Split::Union) { g } else { co };
            let parts = graph
                .components_within(set)
                .iter()
                .map(|c| bi_assemble(g, co, c, memo, color))
                .collect();
            if matches!(split, Split::Union) {
                BiCotree::union(parts)
            } else {
                BiCotree::join(parts)
            }
        }
    }
}

/// Random tree model with `n` leaves (vertices `0..n` in random order), height
/// at most `h`, random leaf colors below `k` and random symmetric rules.
pub fn random_tree_model(k: usize, h: usize, n: usize, seed: u64) -> Result<TreeModel> {
    if k == 0 || h == 0 {
        return Err(Error::InvalidParameter("k and h must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_tree_model_with(&mut rng, k, h, n))
}

pub fn random_tree_model_with<R: Rng>(rng: &mut R, k: usize, h: usize, n: usize) -> TreeModel {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut nodes = Vec::new();
    let root = random_subtree(rng, k, h, &vertices, &mut nodes, true);
    TreeModel {
        colors: k,
        nodes,
        root,
    }
    .compacted()
}

fn random_rule<R: Rng>(rng: &mut R, k: usize) -> Rule {
    let mut rule = Rule::new();
    for a in 0..k {
        for b in a..k {
            if rng.gen_bool(0.5) {
                rule.insert((a, b));
            }
        }
    }
    rule
}

fn random_subtree<R: Rng>(
    rng: &mut R,
    k: usize,
    depth: usize,
    vertices: &[usize],
    nodes: &mut Vec<Node>,
    is_root: bool,
) -> usize {
    if vertices.len() == 1 && !is_root {
        nodes.push(Node::Leaf {
            vertex: vertices[0],
            color: rng.gen_range(0..k),
        });
        return nodes.len() - 1;
    }
    let children = if depth == 1 || vertices.len() <= 1 {
        vertices
            .iter()
            .map(|&v| {
                nodes.push(Node::Leaf {
                    vertex: v,
                    color: rng.gen_range(0..k),
                });
                nodes.len() - 1
            })
            .collect()
    } else {
        let parts = rng.gen_range(2..=vertices.len().min(4));
        let mut cuts: Vec<usize> = (1..vertices.len()).collect();
        cuts.shuffle(rng);
        let mut cuts = cuts[..parts - 1].to_vec();
        cuts.sort_unstable();
        let mut bounds = vec![0];
        bounds.extend(cuts);
        bounds.push(vertices.len());
        bounds
            .windows(2)
            .map(|w| random_subtree(rng, k, depth - 1, &vertices[w[0]..w[1]], nodes, false))
            .collect()
    };
    nodes.push(Node::Internal {
        children,
        rule: random_rule(rng, k),
    });
    nodes.len() - 1
}

/// Serialized node: leaves carry `vertex` and `color`, internal nodes carry
/// `children` and the list of color pairs on which the rule fires.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum NodeJson {
    Leaf { vertex: usize, color: usize },
    Internal { children: Vec<NodeJson>, rule: Vec<[usize; 2]> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeModelJson {
    pub colors: usize,
    pub root: NodeJson,
}

impl TreeModel {
    pub fn to_json(&self) -> TreeModelJson {
        fn go(m: &TreeModel, x: usize) -> NodeJson {
            match &m.nodes[x] {
                Node::Leaf { vertex, color } => NodeJson::Leaf {
                    vertex: *vertex,
                    color: *color,
                },
                Node::Internal { children, rule } => NodeJson::Internal {
                    children: children.iter().map(|&c| go(m, c)).collect(),
                    rule: rule.iter().map(|&(a, b)| [a, b]).collect(),
                },
            }
        }
        TreeModelJson {
            colors: self.colors,
            root: go(self, self.root),
        }
    }

    pub fn from_json(j: &TreeModelJson) -> Result<TreeModel> {
        fn go(j: &NodeJson, nodes: &mut Vec<Node>) -> usize {
            let node = match j {
                NodeJson::Leaf { vertex, color } => Node::Leaf {
                    vertex: *vertex,
                    color: *color,
                },
                NodeJson::Internal { children, rule } => Node::Internal {
                    children: children.iter().map(|c| go(c, nodes)).collect(),
                    rule: rule.iter().map(|p| pair(p[0], p[1])).collect(),
                },
            };
            nodes.push(node);
            nodes.len() - 1
        }
        let mut nodes = Vec::new();
        let root = go(&j.root, &mut nodes);
        TreeModel::from_nodes(j.colors, nodes, root)
    }

    /// DOT drawing of the tree; internal nodes show the pairs their rule fires on.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph T {\n");
        for (x, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Leaf { vertex, color } => {
                    out.push_str(&format!("  n{x} [shape=box,label=\"v{vertex} c{color}\"];\n"));
                }
                Node::Internal { children, rule } => {
                    let pairs: Vec<String> = rule.iter().map(|(a, b)| format!("{a}{b}")).collect();
                    out.push_str(&format!("  n{x} [label=\"{{{}}}\"];\n", pairs.join(",")));
                    for c in children {
                        out.push_str(&format!("  n{x} -> n{c};\n"));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Side-colored bi-cotree check for `b`: every leaf colored by its side and the
/// model defines exactly the cross edges among its leaves.
pub fn bicotree_defines(t: &BiCotree, b: &BipartiteGraph) -> bool {
    t.leaf_colors()
        .iter()
        .all(|&(v, c)| v < b.n() && c == b.side(v).color())
        && t.defines_semi_induced(b.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use crate::graph::semi_induced;

    fn all(n: usize) -> Bitset {
        Bitset::full(n)
    }

    #[test]
    fn evaluate_flat_models() {
        let k3 = Cotree::clique(&[0, 1, 2]);
        assert_eq!(k3.evaluate().unwrap(), complete(3));
        assert_eq!(k3.height(), 1);
        let e3 = Cotree::edgeless(&[0, 1, 2]);
        assert_eq!(e3.evaluate().unwrap(), Graph::new(3));
        let k22 = Cotree::join(vec![Cotree::edgeless(&[0, 1]), Cotree::edgeless(&[2, 3])]);
        assert_eq!(k22.height(), 2);
        assert_eq!(k22.evaluate().unwrap(), complete_bipartite(2, 2).into_graph());
    }

    #[test]
    fn single_vertex_and_empty_conventions() {
        let g = Graph::new(1);
        let t = build_cotree(&g).unwrap();
        assert_eq!(t.height(), 1);
        assert_eq!(t.leaves(), vec![0]);
        assert_eq!(build_cotree(&Graph::new(0)).unwrap().height(), 0);
    }

    #[test]
    fn cotree_recognition() {
        assert!(build_cotree(&path(4).unwrap()).is_none());
        let k5 = build_cotree(&complete(5)).unwrap();
        assert_eq!(k5.height(), 1);
        let p3 = path(3).unwrap();
        let t = build_cotree(&p3).unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(t.evaluate().unwrap(), p3);
        let g = complete_bipartite(2, 2).into_graph();
        assert_eq!(build_cotree(&g).unwrap().height(), 2);
    }

    #[test]
    fn bicotree_recognition() {
        let k23 = complete_bipartite(2, 3);
        let t = build_bicotree(&k23).unwrap();
        assert_eq!(t.height(), 1);
        assert!(bicotree_defines(&t, &k23));

        let h2 = half_graph(2).unwrap();
        let t = build_bicotree(&h2).unwrap();
        assert!(t.height() <= 3);
        assert!(bicotree_defines(&t, &h2));

        let h3 = half_graph(3).unwrap();
        let t = build_bicotree(&h3).unwrap();
        assert!(bicotree_defines(&t, &h3));

        // P7 with its bipartition contains an induced bipartite P7, which has
        // no bipartite module split at the top level
        let p7 = bipartite_path(7).unwrap();
        assert!(build_bicotree(&p7).is_none());
    }

    #[test]
    fn co_bi_co_conversions() {
        let k4 = Cotree::clique(&[0, 1, 2, 3]);
        let a = Bitset::from_iter(4, [0, 2]);
        let b = Bitset::from_iter(4, [1, 3]);
        let bt = k4.semi_induce_model(&a, &b).unwrap();
        assert_eq!(bt.height(), 1);
        assert!(bt.defines_semi_induced(&complete(4)));
        assert_eq!(bt.edges().len(), 4);

        let r2 = universal_threshold(2).unwrap();
        let t = build_cotree(&r2).unwrap();
        let a = Bitset::from_iter(4, [0, 1]);
        let b = Bitset::from_iter(4, [2, 3]);
        let bt = t.semi_induce_model(&a, &b).unwrap();
        assert!(bt.height() <= t.height());
        assert!(bicotree_defines(&bt, &half_graph(2).unwrap()));

        let h2 = half_graph(2).unwrap();
        let bt = build_bicotree(&h2).unwrap();
        let ct = bt.to_cotree();
        assert_eq!(ct.height(), bt.height());
        let h = ct.evaluate().unwrap();
        let back = semi_induced(&h, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(back, h2);
    }

    #[test]
    fn induce_restricts_and_contracts() {
        let k3 = Cotree::clique(&[0, 1, 2]);
        let k2 = k3.induce(&Bitset::from_iter(3, [0, 2]));
        assert_eq!(k2.leaves(), vec![0, 2]);
        assert_eq!(k2.edges(), vec![(0, 2)]);
        let t = build_cotree(&path(3).unwrap()).unwrap();
        let one = t.induce(&Bitset::from_iter(3, [1]));
        assert_eq!(one.height(), 1);
        assert_eq!(t.induce(&Bitset::new(3)).height(), 0);
    }

    #[test]
    fn complement_flips_rules() {
        let k22 = complete_bipartite(2, 2);
        let t = build_bicotree(&k22).unwrap();
        let c = t.complemented();
        assert_eq!(c.height(), t.height());
        assert!(bicotree_defines(&c, &k22.bipartite_complement()));
    }

    #[test]
    fn random_models() {
        let m = random_tree_model(1, 1, 5, 3).unwrap();
        let g = m.evaluate().unwrap();
        assert!(g.edge_count() == 0 || g.edge_count() == 10);
        for seed in 0..50 {
            let m = random_tree_model(1, 3, 10, seed).unwrap();
            assert!(m.height() <= 3);
            let g = m.evaluate().unwrap();
            let t = build_cotree(&g).unwrap();
            assert!(t.height() <= 3);
            assert_eq!(t.evaluate().unwrap(), g);
        }
        assert_eq!(
            random_tree_model(2, 3, 12, 9).unwrap(),
            random_tree_model(2, 3, 12, 9).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let m = random_tree_model(2, 3, 9, 1).unwrap();
        let j = serde_json::to_string(&m.to_json()).unwrap();
        let back = TreeModel::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.edges(), m.edges());
        assert_eq!(back.height(), m.height());
    }

    #[test]
    fn defines_checks() {
        let g = path(3).unwrap();
        assert!(build_cotree_on(&g, &all(3)).unwrap().defines_induced(&g));
        assert!(!Cotree::clique(&[0, 1, 2]).defines_induced(&g));
    }
}
