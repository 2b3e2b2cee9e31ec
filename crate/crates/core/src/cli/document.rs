use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::kgraph::{build_kgraph, ColoredGraph, KGraph, KGraphError, SquareSet};

/// A vertex or edge identifier; integers in the input are read as their
/// decimal text.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawId", into = "String")]
pub struct Id(pub String);

#[derive(Deserialize)]
#[serde(untagged)]
enum RawId {
    Text(String),
    Number(i64),
}

impl From<RawId> for Id {
    fn from(raw: RawId) -> Self {
        match raw {
            RawId::Text(s) => Id(s),
            RawId::Number(n) => Id(n.to_string()),
        }
    }
}

impl From<Id> for String {
    fn from(id: Id) -> String {
        id.0
    }
}

impl From<&str> for Id {
    fn from(s: &str) -> Self {
        Id(s.to_string())
    }
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: Id,
    pub color: usize,
    pub source: Id,
    pub range: Id,
}

/// `e g = gp ep`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDoc {
    pub e: Id,
    pub g: Id,
    pub gp: Id,
    pub ep: Id,
}

/// The JSON form of a colored graph with its factorization squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub k: usize,
    pub vertices: Vec<Id>,
    pub edges: Vec<EdgeDoc>,
    pub squares: Vec<SquareDoc>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// The colored graph and squares, before validation.
    pub fn parts(&self) -> Result<(ColoredGraph, SquareSet), KGraphError> {
        let mut graph = ColoredGraph::new(self.k, self.vertices.iter().map(|v| v.0.as_str()))?;
        for e in &self.edges {
            graph.add_edge(&e.id.0, e.color, &e.source.0, &e.range.0)?;
        }
        let mut squares = SquareSet::new();
        for s in &self.squares {
            squares.add_named(&graph, &s.e.0, &s.g.0, &s.gp.0, &s.ep.0)?;
        }
        Ok((graph, squares))
    }

    pub fn build(&self) -> Result<KGraph, KGraphError> {
        let (graph, squares) = self.parts()?;
        build_kgraph(graph, squares)
    }

    /// The document of a validated graph, squares as they were given.
    pub fn from_kgraph(g: &KGraph) -> Self {
        let cg = g.graph();
        let vertices = cg
            .vertex_ids()
            .map(|v| Id(cg.vertex_name(v).into()))
            .collect();
        let edges = cg
            .edge_ids()
            .map(|e| {
                let edge = cg.edge(e);
                EdgeDoc {
                    id: Id(edge.name.clone()),
                    color: edge.color,
                    source: Id(cg.vertex_name(edge.source).into()),
                    range: Id(cg.vertex_name(edge.range).into()),
                }
            })
            .collect();
        let name = |e| Id(cg.edge(e).name.clone());
        let squares = g
            .input_squares()
            .squares
            .iter()
            .map(|s| SquareDoc {
                e: name(s.e),
                g: name(s.g),
                gp: name(s.gp),
                ep: name(s.ep),
            })
            .collect();
        GraphDocument {
            k: g.k(),
            vertices,
            edges,
            squares,
        }
    }

    /// The part of the document a validation error talks about: the named
    /// edges and vertices, the edges between the named vertices, and every
    /// square touching a kept edge.
    pub fn fragment(&self, err: &KGraphError) -> GraphDocument {
        let mut edges: BTreeSet<&str> = BTreeSet::new();
        let mut vertices: BTreeSet<&str> = BTreeSet::new();
        match err {
            KGraphError::MissingSquare { e, g } | KGraphError::AmbiguousSquare { e, g } => {
                edges.insert(e);
                edges.insert(g);
            }
            KGraphError::NotComposable { left, right } => {
                edges.insert(left);
                edges.insert(right);
            }
            KGraphError::CubeFailure { word } => edges.extend(word.iter().map(String::as_str)),
            KGraphError::NotBijective {
                range,
                origin,
                colors,
            } => {
                vertices.insert(range);
                vertices.insert(origin);
                for e in &self.edges {
                    let touches = vertices.contains(e.source.0.as_str())
                        || vertices.contains(e.range.0.as_str());
                    if touches && (e.color == colors.0 || e.color == colors.1) {
                        edges.insert(&e.id.0);
                    }
                }
            }
            KGraphError::SourceViolation { vertex, .. } => {
                vertices.insert(vertex);
            }
            KGraphError::UnknownEdge(e) | KGraphError::DuplicateEdge(e) => {
                edges.insert(e);
            }
            KGraphError::UnknownVertex(v) | KGraphError::DuplicateVertex(v) => {
                vertices.insert(v);
            }
            _ => {}
        }
        let kept: Vec<EdgeDoc> = self
            .edges
            .iter()
            .filter(|e| edges.contains(e.id.0.as_str()))
            .cloned()
            .collect();
        for e in &kept {
            vertices.insert(&e.source.0);
            vertices.insert(&e.range.0);
        }
        let squares = self
            .squares
            .iter()
            .filter(|s| {
                [&s.e, &s.g, &s.gp, &s.ep]
                    .iter()
                    .any(|x| edges.contains(x.0.as_str()))
            })
            .cloned()
            .collect();
        GraphDocument {
            k: self.k,
            vertices: self
                .vertices
                .iter()
                .filter(|v| vertices.contains(v.0.as_str()))
                .cloned()
                .collect(),
            edges: kept,
            squares,
        }
    }
}
