use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge #{index} ({u}, {v}): endpoint out of range for n = {n}")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("edge #{index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge-list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph too large: {n} vertices (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("not a permutation of 0..{n}: {reason}")]
    NotAPermutation { n: usize, reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0}")]
    NotDominating(String),
    #[error("random generation failed after {attempts} attempts")]
    AttemptsExhausted { attempts: usize },
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
