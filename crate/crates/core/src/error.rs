use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("admissibility bound exceeded: no truncation level up to {cap} kills all long paths")]
    AdmissibilityExceeded { cap: usize },
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("relation {relation} violated by module {module}")]
    RelationViolated { relation: String, module: String },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Semantic(String),
    #[error("hypotheses not satisfied: {0}")]
    HypothesesNotSatisfied(String),
    #[error("cochain is not a cocycle: relation {0} does not vanish")]
    NotACocycle(String),
    #[error("group element is not invertible at vertex {0}")]
    NotInvertible(String),
    #[error("witness does not verify: {0}")]
    UnverifiedWitness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
