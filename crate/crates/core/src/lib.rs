//! Exact arithmetic: Gaussian rationals, polynomial-times-plane-wave fields,
//! typed tensors and dense matrices.

pub mod field;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod tensor;

pub use field::{coord_index, Exponents, Field, Momentum, COORDS};
pub use linalg::{Matrix, Solution};
pub use ring::Ring;
pub use scalar::{parse_rational, rat, rational_to_string, Rational, Scalar};
pub use tensor::{Axis, GenTensor, Kind, MultiIndex};

/// Tensor of exact constants.
pub type Tensor = GenTensor<Scalar>;
/// Tensor whose entries are fields on the 10 coordinates.
pub type FieldTensor = GenTensor<Field>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("axis kinds do not pair: {a} against {b}")]
    KindMismatch { a: String, b: String },
}
