//! Standard-gauge geometry on the ten-dimensional frame manifold: seeded
//! polynomial connections, curvature and its components, invariant
//! operators, the named differential identities, the field equations and
//! the extended Dirac operator.

pub mod christoffel;
pub mod connection;
pub mod cosmology;
pub mod curvature;
pub mod derivative;
pub mod dirac;
pub mod equations;
pub mod fmat;
pub mod identities;
pub mod operators;

pub use connection::{parse_active, random_connection, random_general, Connection};
pub use curvature::CurvatureBundle;
pub use derivative::covariant_derivative;
pub use identities::{identity_suite, Residual};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GeometryError {
    #[error("{0}")]
    Limit(String),
    #[error("{name} is nonzero at {indices:?}: {value}")]
    Nonzero { name: String, indices: Vec<usize>, value: String },
    #[error("operator {op} does not accept {got}")]
    Shape { op: &'static str, got: String },
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl GeometryError {
    pub(crate) fn nonzero(name: &str, t: &adskit_core::FieldTensor) -> Option<GeometryError> {
        t.first_nonzero().map(|(indices, v)| GeometryError::Nonzero { name: name.to_string(), indices, value: v.to_string() })
    }
}
