use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertices {u} and {v} are not adjacent; the key is not a clique")]
    NotAClique { u: usize, v: usize },
    #[error("duplicate clique key {key}")]
    DuplicateKey { key: String },
    #[error("weight for clique {key} must be a positive integer")]
    NonPositiveWeight { key: String },
    #[error("{what} exceeds the supported size limit ({limit})")]
    SizeLimit { what: String, limit: u64 },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
