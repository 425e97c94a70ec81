use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("value does not have unit modulus: {0}")]
    NotUnitModulus(String),
    #[error("result is not representable exactly: {0}")]
    Unrepresentable(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation needs an invertible spec but a block has eigenvalue 0")]
    NilpotentEigenvalue,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the extended mixing limit set is only characterized at the zero vector")]
    UnsupportedJmixNonzero,
    #[error("target is not in the classified set: {0}")]
    NotInSet(String),
    #[error("pinned binomial system is singular at index {0}")]
    SingularSystem(u64),
    #[error("circle search exhausted its index budget at term {term}")]
    SearchExhausted { term: u64 },
    #[error("rotation constraints have no common residue")]
    ScheduleConflict,
    #[error("contracting blocks only admit the zero target")]
    NonzeroTarget,
    #[error("precision ceiling of {0} bits reached before the error bound was met")]
    PrecisionExhausted(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
