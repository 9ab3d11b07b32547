use thiserror::Error;

use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("root {0} is isotropic")]
    IsotropicRoot(Weight),
    #[error("{0} is not a root of the system")]
    UnknownRoot(Weight),
    #[error("root {0} is singular")]
    SingularRoot(Weight),
    #[error("root {0} is regular; singular transport does not apply")]
    RegularRootNotTransportable(Weight),
    #[error("{0} is not a simple root of the base")]
    NotSimple(Weight),
    #[error("candidate simple roots are not linearly independent")]
    NotLinearlyIndependent,
    #[error("root {0} is neither a non-negative nor a non-positive combination of the base")]
    SpanViolation(Weight),
    #[error("rank-one pattern of {0} matches no classified type")]
    UnclassifiablePattern(Weight),
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("invalid root system: {0}")]
    InvalidSystem(String),
    #[error("weight is not critical for {0}")]
    NotCritical(Weight),
    #[error("no base in the class exposes {0}")]
    NotFound(Weight),
    #[error("weight is not fully reflectable: {0}")]
    NotFullyReflectable(String),
    #[error("multiplicity of {0} is not recorded")]
    UnknownMultiplicity(Weight),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
