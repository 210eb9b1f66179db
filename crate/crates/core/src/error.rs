use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed conductor: must be at least 1")]
    MalformedConductor,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix: rank {rank} < size {size}")]
    Singular { rank: usize, size: usize },
    #[error("modules belong to different Hopf algebras")]
    ParentMismatch,
    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("type mismatch at slice {slice}, position {position}: {detail}")]
    TypeMismatch { slice: usize, position: usize, detail: String },
    #[error("unbound object symbol '{0}'")]
    UnboundSymbol(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("descent failure: {0}")]
    DescentFailure(String),
    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
