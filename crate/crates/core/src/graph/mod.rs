//! Simple undirected graphs on dense vertex identifiers, with bitset
//! adjacency rows, and bipartite graphs with a fixed bipartition.

pub mod enumerate;
pub mod generate;
pub mod io;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Bitset>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Malformed(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn all(&self) -> Bitset {
        Bitset::full(self.n())
    }

    /// Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect::<Vec<_>>();
        debug_assert!(n == adj.len());
        Graph { adj }
    }

    /// Induced subgraph on `vertices`, relabelled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components of the whole graph, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Bitset> {
        self.components_within(&self.all())
    }

    /// Connected components of `G[set]`, ordered by smallest vertex.
    pub fn components_within(&self, set: &Bitset) -> Vec<Bitset> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = Bitset::new(self.n());
            comp.insert(start);
            let mut frontier = comp.clone();
            remaining.remove(start);
            while !frontier.is_empty() {
                let mut next = Bitset::new(self.n());
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&remaining);
                remaining.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    /// Connected components of the complement of `G[set]`, ordered by smallest vertex.
    pub fn co_components_within(&self, set: &Bitset) -> Vec<Bitset> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = Bitset::new(self.n());
            comp.insert(start);
            let mut frontier = comp.clone();
            remaining.remove(start);
            while !frontier.is_empty() {
                let mut next = Bitset::new(self.n());
                for v in &frontier {
                    // non-neighbours of v inside the remaining set
                    next.union_with(&remaining.difference(&self.adj[v]));
                }
                next.intersect_with(&remaining);
                remaining.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_within(&self, set: &Bitset) -> bool {
        self.components_within(set).len() <= 1
    }

    pub fn is_clique(&self, set: &Bitset) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, set: &Bitset) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Lexicographic product: `(u,x) ~ (v,y)` iff `u ~ v`, or `u = v` and `x ~ y`.
    /// Vertex `(u, x)` gets identifier `u * |H| + x`.
    pub fn lexicographic_product(&self, h: &Graph) -> Graph {
        let m = h.n();
        let mut g = Graph::new(self.n() * m);
        for u in self.vertices() {
            for v in self.vertices() {
                for x in 0..m {
                    for y in 0..m {
                        let (a, b) = (u * m + x, v * m + y);
                        if a < b && (self.has_edge(u, v) || (u == v && h.has_edge(x, y))) {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }
}

/// Which side of a bipartition a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// Colour used in bi-cotrees: left is 0, right is 1.
    pub fn color(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

/// A graph together with a fixed bipartition into independent sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    left: Bitset,
}

impl BipartiteGraph {
    /// Fails if an edge lies inside one side.
    pub fn new(graph: Graph, left: Bitset) -> Result<Self> {
        let right = left.complement();
        for (u, v) in graph.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(Error::NotBipartite(u, v));
            }
        }
        debug_assert_eq!(left.len() + right.len(), graph.n());
        Ok(Self { graph, left })
    }

    /// Bipartite graph with sides `0..l` and `l..l+r`; edges given as
    /// `(left_index, right_index)` pairs in side-local coordinates.
    pub fn from_sides(l: usize, r: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(l + r);
        for &(a, b) in edges {
            if a >= l || b >= r {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n: l.max(r),
                });
            }
            g.add_edge(a, l + b);
        }
        Self::new(g, Bitset::from_iter(l + r, 0..l))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn left(&self) -> &Bitset {
        &self.left
    }

    pub fn right(&self) -> Bitset {
        self.left.complement()
    }

    pub fn side_set(&self, side: Side) -> Bitset {
        match side {
            Side::Left => self.left.clone(),
            Side::Right => self.right(),
        }
    }

    pub fn side(&self, v: usize) -> Side {
        if self.left.contains(v) {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    /// Same sides; a cross pair is adjacent iff it was non-adjacent.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let right = self.right();
        let adj = (0..self.n())
            .map(|v| {
                let other = if self.left.contains(v) { &right } else { &self.left };
                other.difference(self.graph.neighbors(v))
            })
            .collect();
        BipartiteGraph {
            graph: Graph { adj },
            left: self.left.clone(),
        }
    }

    /// Components of the bipartite complement restricted to `set`.
    pub fn bi_co_components_within(&self, set: &Bitset) -> Vec<Bitset> {
        self.bipartite_complement().graph.components_within(set)
    }

    /// Bipartite graph induced by `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> BipartiteGraph {
        let graph = self.graph.induced(vertices);
        let left = Bitset::from_iter(
            vertices.len(),
            vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| self.left.contains(v))
                .map(|(i, _)| i),
        );
        BipartiteGraph { graph, left }
    }

    pub fn is_complete_bipartite(&self) -> bool {
        let right = self.right();
        self.left.iter().all(|u| right.is_subset(self.graph.neighbors(u)))
    }
}

/// The bipartite graph semi-induced by disjoint `a` and `b`: sides `a` and `b`,
/// keeping only edges with one endpoint in each. Local vertex `i` is `a[i]` for
/// `i < |a|` and `b[i - |a|]` otherwise.
pub fn semi_induced(g: &Graph, a: &[usize], b: &[usize]) -> Result<BipartiteGraph> {
    let n = g.n();
    let mut seen = Bitset::new(n);
    for &v in a.iter().chain(b) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if seen.contains(v) {
            return Err(Error::Overlap(v));
        }
        seen.insert(v);
    }
    let mut h = Graph::new(a.len() + b.len());
    for (i, &u) in a.iter().enumerate() {
        for (j, &v) in b.iter().enumerate() {
            if g.has_edge(u, v) {
                h.add_edge(i, a.len() + j);
            }
        }
    }
    let total = a.len() + b.len();
    BipartiteGraph::new(h, Bitset::from_iter(total, 0..a.len()))
}

#[cfg(test)]
mod tests {
    use super::generate::*;
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = complete(3);
        let c = k3.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.n(), 3);
    }

    #[test]
    fn complement_of_p4_is_p4() {
        // 0-1-2-3 ; complement has edges 0-2, 0-3, 1-3: path 2-0-3-1
        let p4 = path(4).unwrap();
        let c = p4.complement();
        let relabel = [2, 0, 3, 1];
        let mapped = c.induced(&relabel);
        assert_eq!(mapped, p4);
    }

    #[test]
    fn bipartite_complement_of_complete_bipartite() {
        let k34 = complete_bipartite(3, 4);
        let c = k34.bipartite_complement();
        assert_eq!(c.graph().edge_count(), 0);
        assert_eq!(c.left().len(), 3);
        assert_eq!(c.right().len(), 4);
    }

    #[test]
    fn bipartite_complement_of_p4() {
        // v1-v2-v3-v4 as 0-1-2-3, sides {0,2}, {1,3}
        let p4 = path(4).unwrap();
        let b = BipartiteGraph::new(p4, Bitset::from_iter(4, [0, 2])).unwrap();
        let c = b.bipartite_complement();
        assert_eq!(c.graph().edges().collect::<Vec<_>>(), vec![(0, 3)]);
    }

    #[test]
    fn semi_induced_examples() {
        let k5 = complete(5);
        let b = semi_induced(&k5, &[0, 1], &[2, 3]).unwrap();
        assert!(b.is_complete_bipartite());
        assert_eq!(b.graph().edge_count(), 4);

        let e = Graph::new(6);
        let b = semi_induced(&e, &[0, 1, 2], &[3, 4]).unwrap();
        assert_eq!(b.graph().edge_count(), 0);

        // R3 restricted to the a/b sides is H3
        let r3 = universal_threshold(3).unwrap();
        let b = semi_induced(&r3, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(b, half_graph(3).unwrap());

        assert!(matches!(
            semi_induced(&k5, &[0, 1], &[1, 2]),
            Err(Error::Overlap(1))
        ));
    }

    #[test]
    fn components() {
        let e = Graph::new(3);
        let comps: Vec<_> = e.connected_components().iter().map(Bitset::to_vec).collect();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(path(5).unwrap().connected_components().len(), 1);
        let two = complete(3).disjoint_union(&complete(3));
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn co_components_of_join() {
        // K_{2,2}: complement is two disjoint edges
        let g = complete_bipartite(2, 2).into_graph();
        let cc = g.co_components_within(&g.all());
        assert_eq!(cc.len(), 2);
    }

    #[test]
    fn lex_with_k1_is_identity() {
        let h = cycle(5).unwrap();
        assert_eq!(complete(1).lexicographic_product(&h), h);
    }

    #[test]
    fn rejects_cross_side_violation() {
        let g = path(3).unwrap();
        assert!(BipartiteGraph::new(g, Bitset::from_iter(3, [0, 1])).is_err());
    }
}
