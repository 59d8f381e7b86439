use thiserror::Error;

use crate::set::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family does not contain the empty set")]
    MissingEmpty,
    #[error("family does not contain the full ground set")]
    MissingFull,
    #[error("family is not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("family is not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("set {0:?} is not a subset of the ground set")]
    PointOutOfRange(PointSet),
    #[error("carrier of {points} points exceeds the limit of {limit}")]
    CarrierTooLarge { points: usize, limit: usize },
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("map is not total: point {0:?} has no image")]
    MissingImage(String),
    #[error("image index {0} is outside the codomain")]
    ImageOutOfRange(usize),
    #[error("codomain of the first map differs from the domain of the second")]
    DomainMismatch,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("internal characterization mismatch: {0}")]
    InternalCharacterizationMismatch(String),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("budget of {budget} instances exceeded after {covered} instances")]
    BudgetExceeded { budget: u64, covered: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
