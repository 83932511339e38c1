use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),

    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),

    #[error("invalid morphism payload: {0}")]
    InvalidPayload(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("square does not commute")]
    NotCommuting,

    #[error("morphism is not a zero-epi")]
    NotZeroEpi,

    #[error("morphism is not a kernel")]
    NotKernel,

    #[error("morphism is not a cokernel")]
    NotCokernel,

    #[error("endomorphism is not a self-adjoint idempotent")]
    NotSelfAdjointIdempotent,

    #[error("lattice not enumerable; supply --elements")]
    NotEnumerable,

    #[error("element list is not closed under {0}")]
    NotClosed(&'static str),

    #[error("enumeration guard exceeded: {size} morphisms > cap {cap}")]
    GuardExceeded { size: u128, cap: u128 },

    #[error("base category is not Boolean: {0}")]
    NotBoolean(String),

    #[error("middle part of the factorisation is not invertible")]
    MiddleNotInvertible,

    #[error("operation not supported by this instance: {0}")]
    Unsupported(&'static str),

    #[error("morphisms are not parallel")]
    NotParallel,

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
