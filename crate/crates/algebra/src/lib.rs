//! The ten-dimensional anti-de Sitter algebra: matrices, structure
//! constants, roots and weights, the enveloping algebra and tensor splits.

pub mod action;
pub mod basis;
pub mod decomp;
pub mod enveloping;
pub mod lie;
pub mod roots;

pub use lie::{algebra, Algebra, BracketTable};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0} is not in the span of the basis")]
    NotInSpan(String),
    #[error("singular form: {0}")]
    Singular(&'static str),
    #[error("{0}")]
    Mismatch(String),
    #[error("highest weight {0} is not dominant")]
    NotDominant(String),
    #[error("repeated Casimir eigenvalue {0} across inequivalent candidates")]
    RepeatedCasimir(String),
    #[error("{0}")]
    Core(#[from] adskit_core::CoreError),
}
