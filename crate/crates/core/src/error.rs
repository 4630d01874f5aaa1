use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("total dimension {0} exceeds the tensor size cap of {cap}", cap = crate::hilbert::SIZE_CAP)]
    SizeCapExceeded(usize),

    #[error("vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("degenerate pair: {0}")]
    DegeneratePair(String),

    #[error("not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("not idempotent (max deviation {0:e})")]
    NotIdempotent(f64),

    #[error("undefined ratio: {0}")]
    UndefinedRatio(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
