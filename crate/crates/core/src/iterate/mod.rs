//! The color-by-color ladder: modules `Y_j ⊗ KP(Lambda_m)`, their balanced
//! tensor products and flips `Rtheta`, the dictionary into
//! `KP(Lambda_{m+1})`, and the verification suites built on them.

mod balanced;
pub mod census;
mod module;
pub mod representation;
mod stage;
pub mod suites;

pub use balanced::{merge_pair, split_module, BalancedTensor};
pub use module::{Generator, ModuleElement, ModuleSpace};
pub use stage::{Ladder, Stage};

use thiserror::Error;

use crate::kgraph::KGraphError;
use crate::kpalg::KpError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IterateError {
    #[error("tensor shapes do not match")]
    ShapeMismatch,
    #[error("color {0} cannot be used here")]
    ColorOutOfRange(usize),
    #[error("stage {m} needs 1 <= m < k = {k}")]
    BadStage { m: usize, k: usize },
    #[error("census level {level} is larger than {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error(transparent)]
    Kp(#[from] KpError),
    #[error(transparent)]
    Graph(#[from] KGraphError),
}

#[cfg(test)]
mod tests;
