use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone input has neither a generator nor a half-space representation")]
    EmptyRepresentation,
    #[error("generator and half-space representations describe different cones")]
    InconsistentRepresentations,
    #[error("double description ray limit exceeded (limit {limit}, reached {reached})")]
    DdLimitExceeded { limit: usize, reached: usize },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("candidate is not contained in the cone")]
    NotSubcone,
    #[error("point is not contained in the cone")]
    NotInCone,
    #[error("functional is not in the dual cone")]
    NotInDualCone,
    #[error("subspace is not an order ideal: the quotient cone is not proper")]
    NotAnIdeal,
    #[error("ray index {index} out of range ({count} rays)")]
    InvalidRayIndex { index: usize, count: usize },
    #[error("face precondition violated: {0}")]
    FacePrecondition(String),
    #[error("polytope is not symmetric")]
    NotSymmetric,
    #[error("polytope face must be proper: neither empty nor the whole vertex set")]
    ImproperFace,
    #[error("map precondition violated: {0}")]
    MapPrecondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
