use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    InvalidPrime(u64),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("spanning matrix does not have full column rank")]
    RankDeficientSpan,
    #[error("components {0} and {1} coincide")]
    DuplicateComponent(usize, usize),
    #[error("projection annihilates component {0}")]
    ProjectionAnnihilates(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("random sampling did not produce a valid component after {0} attempts")]
    RetryExhausted(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
