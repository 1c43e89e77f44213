use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad dimension: expected {expected}, got {got}")]
    BadDimension { expected: usize, got: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("fields or operators live on different grids")]
    GridMismatch,

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("functional is not purely imaginary: |Re l(e_{index})| = {real_part:e}")]
    NotPurelyImaginary { index: usize, real_part: f64 },

    #[error("boundary data is not Hermitian: max violation {defect:e}")]
    NotHermitianData { defect: f64 },

    #[error("source is not anti-Hermitian: max violation {defect:e}")]
    NotAntiHermitianSource { defect: f64 },

    #[error("dense Galerkin basis of dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("singular linear system")]
    SingularSystem,

    #[error("trajectory is empty")]
    EmptyTrajectory,

    #[error("sample times are not uniformly spaced")]
    NonuniformTimes,

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("sample times must be strictly ascending")]
    UnorderedTimes,

    #[error("field csv: {0}")]
    Csv(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
