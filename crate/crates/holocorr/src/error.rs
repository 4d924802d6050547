use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation at a pole of a coordinate map")]
    PoleInput,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("branch tracking lost near merged roots")]
    BranchTrackingLost,
    #[error("cycle passes through a branch point of the correspondence")]
    BranchPointOnCycle,
    #[error("parameter is not hyperbolic: no attracting cycle found")]
    NotHyperbolic,
    #[error("continuation landed on period {found}, expected {expected}")]
    PeriodMismatch { expected: usize, found: usize },
    #[error("iteration failed to converge")]
    NoConvergence,
    #[error("point is not in the attracting petal")]
    NotInPetal,
    #[error("parameter lies in the connectedness locus, not the shift locus")]
    NotInShiftLocus,
    #[error("Newton inversion of the Fatou coordinate failed")]
    InversionFailure,
    #[error("degenerate parameter: {0}")]
    DegenerateParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
