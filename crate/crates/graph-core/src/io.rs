//! Graph file formats: JSON (schema-versioned), plain edge-list text, and DOT
//! export. JSON round-trips losslessly; the edge list is a convenience input
//! that cannot represent trailing isolated vertices.

use crate::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    BadVersion(u32),
    #[error("graph: {0}")]
    Graph(#[from] crate::GraphError),
    #[error("edge list line {0}: {1}")]
    EdgeList(usize, String),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    format: u32,
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<String, String>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        format: FORMAT_VERSION,
        n: g.n(),
        edges: g.edges(),
        labels: g
            .labels()
            .iter()
            .map(|(v, l)| (v.to_string(), l.clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<Graph, IoError> {
    let doc: GraphJson = serde_json::from_str(s)?;
    if doc.format != FORMAT_VERSION {
        return Err(IoError::BadVersion(doc.format));
    }
    let mut g = Graph::from_edges(doc.n, &doc.edges)?;
    for (v, l) in doc.labels {
        let v: Vertex = v
            .parse()
            .map_err(|_| IoError::EdgeList(0, format!("bad label key {v:?}")))?;
        g.check_vertex(v)?;
        g.set_label(v, l);
    }
    Ok(g)
}

/// One "u v" per line; n is inferred as max id + 1. '#' starts a comment.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<Graph, IoError> {
    let mut edges = Vec::new();
    let mut max = 0;
    for (i, line) in s.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(IoError::EdgeList(i + 1, "expected two ids".into())),
        };
        let u: Vertex = u
            .parse()
            .map_err(|_| IoError::EdgeList(i + 1, format!("bad id {u:?}")))?;
        let v: Vertex = v
            .parse()
            .map_err(|_| IoError::EdgeList(i + 1, format!("bad id {v:?}")))?;
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(IoError::EdgeList(0, "no edges".into()));
    }
    Ok(Graph::from_edges(max as usize + 1, &edges)?)
}

/// DOT export; `colors` paints vertex groups (used to render models).
pub fn to_dot(g: &Graph, colors: &BTreeMap<Vertex, String>) -> String {
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if let Some(l) = g.label(v) {
            attrs.push(format!("label=\"{v}:{l}\""));
        }
        if let Some(c) = colors.get(&v) {
            attrs.push(format!("style=filled, fillcolor=\"{c}\""));
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {v};\n"));
        } else {
            out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
