use thiserror::Error;

/// Errors shared by every layer of the engine.
///
/// The variants mirror the failure modes of the data model: shape or
/// schema problems are caught when a catalog is loaded, `MissingData`
/// is raised lazily when a query needs a group or homomorphism the
/// catalog does not carry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("infinite set: {0}")]
    InfiniteSet(String),

    #[error("catalog parse error: {0}")]
    ParseError(String),

    #[error("catalog schema violation: {0}")]
    SchemaViolation(String),

    #[error("ill-defined homomorphism: {0}")]
    IllDefinedHom(String),

    #[error("inconsistent stability declaration: {0}")]
    InconsistentStability(String),

    #[error("missing catalog data: {0}")]
    MissingData(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("Wecken condition unknown for {0}")]
    WeckenUnknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
