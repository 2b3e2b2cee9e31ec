//! Edge correspondences over the vertex algebra, their flips, rank-one
//! operators, and the product-system fibers.

mod checks;
mod element;
pub mod fiber;

pub use checks::check_generating_system;
pub use element::{CorrElement, EdgeCorrespondences, RankOneSum, VertexFn};

use thiserror::Error;

use crate::kgraph::KGraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrError {
    #[error("elements live in different tensor words")]
    Mismatch,
    #[error("color {0} is not active in this graph")]
    ColorOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] KGraphError),
}

#[cfg(test)]
mod tests;
