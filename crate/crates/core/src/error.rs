use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("line {line}: self-loop on node '{label}'")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: expected 2 whitespace-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },

    #[error("membership: unknown node '{0}'")]
    UnknownNode(String),

    #[error("membership: node '{0}' listed more than once")]
    DuplicateNode(String),

    #[error("membership: node '{0}' has no community")]
    MissingNode(String),

    #[error("unknown community id {0}")]
    UnknownCommunity(usize),

    #[error("graph has no edges; modularity is undefined")]
    NoEdges,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("partitions cover different node sets ({left} vs {right} nodes)")]
    NodeSetMismatch { left: usize, right: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
