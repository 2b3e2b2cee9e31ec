//! The graded Kumjian–Pask algebra of a k-graph with exact rational
//! coefficients.

mod algebra;
mod element;
pub mod fuzz;
pub mod literal;
pub mod rank;
pub mod scalar;

pub use algebra::KpAlgebra;
pub use element::{KpElement, Monomial};
pub use scalar::Scalar;

use thiserror::Error;

use crate::kgraph::KGraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KpError {
    #[error("elements belong to different graphs")]
    GraphMismatch,
    #[error("expansion level {level} is below a monomial degree or uses an inactive color")]
    LevelTooLow { level: String },
    #[error("paths of a monomial must share their source")]
    SourceMismatch,
    #[error("edge #{0} is not in this graph")]
    InactiveEdge(u32),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] KGraphError),
}
