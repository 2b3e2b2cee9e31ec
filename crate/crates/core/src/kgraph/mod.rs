//! Finite k-graphs: colored graphs with factorization squares, validation,
//! path enumeration, factorization and sub-graph restriction.

mod degree;
mod graph;
mod path;
pub mod samples;

pub use degree::{Grade, MultiDegree};
pub use graph::{
    build_kgraph, ColoredGraph, Edge, EdgeId, GraphTag, KGraph, Square, SquareSet, VertexId,
};
pub use path::Path;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KGraphError {
    #[error("color {color} is outside 1..={k}")]
    BadColor { color: usize, k: usize },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("malformed square {0}")]
    InvalidSquare(String),
    #[error("no square for the composable pair ({e}, {g})")]
    MissingSquare { e: String, g: String },
    #[error("more than one square for the pair ({e}, {g})")]
    AmbiguousSquare { e: String, g: String },
    #[error("flip is not a bijection on the block {range} <- {origin} with colors ({}, {})", colors.0, colors.1)]
    NotBijective {
        range: String,
        origin: String,
        colors: (usize, usize),
    },
    #[error("cube condition fails on the word [{}]", word.join(","))]
    CubeFailure { word: Vec<String> },
    #[error("vertex `{vertex}` receives no edge of color {color}")]
    SourceViolation { vertex: String, color: usize },
    #[error("empty color set")]
    EmptyColorSet,
    #[error("empty edge word")]
    EmptyWord,
    #[error("edges `{left}` and `{right}` are not composable")]
    NotComposable { left: String, right: String },
    #[error("cannot split degree {degree} as {head} + {tail}")]
    BadSplit {
        degree: String,
        head: String,
        tail: String,
    },
}

impl KGraphError {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            KGraphError::BadColor { .. } => "BadColor",
            KGraphError::DuplicateVertex(_) => "DuplicateVertex",
            KGraphError::DuplicateEdge(_) => "DuplicateEdge",
            KGraphError::UnknownVertex(_) => "UnknownVertex",
            KGraphError::UnknownEdge(_) => "UnknownEdge",
            KGraphError::InvalidSquare(_) => "InvalidSquare",
            KGraphError::MissingSquare { .. } => "MissingSquare",
            KGraphError::AmbiguousSquare { .. } => "AmbiguousSquare",
            KGraphError::NotBijective { .. } => "NotBijective",
            KGraphError::CubeFailure { .. } => "CubeFailure",
            KGraphError::SourceViolation { .. } => "SourceViolation",
            KGraphError::EmptyColorSet => "EmptyColorSet",
            KGraphError::EmptyWord => "EmptyWord",
            KGraphError::NotComposable { .. } => "NotComposable",
            KGraphError::BadSplit { .. } => "BadSplit",
        }
    }
}
