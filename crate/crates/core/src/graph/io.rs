//! JSON and DOT serialization of graphs.

use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, Graph};
use crate::bitset::Bitset;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SidesJson {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// On-disk graph format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sides: Option<SidesJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            sides: None,
            labels: None,
        }
    }

    pub fn from_bipartite(b: &BipartiteGraph) -> Self {
        let mut out = Self::from_graph(b.graph());
        out.sides = Some(SidesJson {
            left: b.left().to_vec(),
            right: b.right().to_vec(),
        });
        out
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::Malformed(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.n
                )));
            }
        }
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }

    /// Fails if no sides are recorded or they do not partition the vertices.
    pub fn to_bipartite(&self) -> Result<BipartiteGraph> {
        let g = self.to_graph()?;
        let sides = self
            .sides
            .as_ref()
            .ok_or_else(|| Error::Malformed("graph has no sides".into()))?;
        let mut seen = Bitset::new(self.n);
        for &v in sides.left.iter().chain(&sides.right) {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen.contains(v) {
                return Err(Error::Overlap(v));
            }
            seen.insert(v);
        }
        if seen.len() != self.n {
            return Err(Error::Malformed("sides do not cover every vertex".into()));
        }
        BipartiteGraph::new(g, Bitset::from_iter(self.n, sides.left.iter().copied()))
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("serializable")
}

pub fn bipartite_to_json(b: &BipartiteGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_bipartite(b)).expect("serializable")
}

pub fn parse_graph_json(s: &str) -> Result<GraphJson> {
    Ok(serde_json::from_str(s)?)
}

/// DOT for an undirected graph; optional labels replace vertex ids.
pub fn graph_to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels {
            Some(l) => out.push_str(&format!("  {v} [label=\"{}\"];\n", l[v].replace('"', "\\\""))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT with the two sides drawn as ranked clusters.
pub fn bipartite_to_dot(b: &BipartiteGraph) -> String {
    let mut out = String::from("graph G {\n  rankdir=LR;\n");
    for (name, side) in [("left", b.left().clone()), ("right", b.right())] {
        out.push_str(&format!("  subgraph cluster_{name} {{\n    label=\"{name}\";\n"));
        for v in &side {
            out.push_str(&format!("    {v};\n"));
        }
        out.push_str("  }\n");
    }
    for (u, v) in b.graph().edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{half_graph, path};

    #[test]
    fn json_round_trip() {
        let g = path(5).unwrap();
        let j = graph_to_json(&g);
        assert_eq!(parse_graph_json(&j).unwrap().to_graph().unwrap(), g);

        let h = half_graph(3).unwrap();
        let j = bipartite_to_json(&h);
        assert_eq!(parse_graph_json(&j).unwrap().to_bipartite().unwrap(), h);
    }

    #[test]
    fn rejects_bad_input() {
        let j = r#"{"n": 2, "edges": [[0, 2]]}"#;
        assert!(parse_graph_json(j).unwrap().to_graph().is_err());
        let j = r#"{"n": 2, "edges": [[0, 1]], "sides": {"left": [0, 1], "right": []}}"#;
        assert!(parse_graph_json(j).unwrap().to_bipartite().is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let d = graph_to_dot(&path(3).unwrap(), None);
        assert!(d.contains("0 -- 1") && d.contains("1 -- 2"));
    }
}
