use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("relation {0} is not a composable path")]
    NonComposableRelation(String),

    #[error("algebra appears infinite-dimensional: a surviving path exceeds length {0}")]
    InfiniteDimensional(usize),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("search space too large: {what} needs {size} candidates, cap is {cap}")]
    SearchCapExceeded { what: String, size: u128, cap: u128 },

    #[error("projective cover of the zero module")]
    ZeroModule,

    #[error("module not identifiable in catalog: {0}")]
    NotInCatalog(String),

    #[error("unsupported quiver shape for the built-in catalog: {0}")]
    UnsupportedQuiver(String),

    #[error("catalog validation failed: {0}")]
    InvalidCatalog(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
