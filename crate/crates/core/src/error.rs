use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("representations live over different quivers")]
    QuiverMismatch,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("unsupported quiver type: {0}")]
    UnsupportedQuiver(String),

    #[error("vertex matrices do not intertwine the arrow matrices at arrow {0}")]
    NotIntertwining(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no idempotent splitting found after {0} candidate elements and no indecomposability certificate")]
    SplitSearchExhausted(usize),

    #[error("lattice closure exceeded {0} nodes")]
    LatticeTooLarge(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
