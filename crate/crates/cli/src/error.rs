use std::path::PathBuf;

use thiserror::Error;

/// A graph or path-decomposition file that does not parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    MalformedHeader(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("expected `e <u> <v>`")]
    MalformedEdge,
    #[error("bad vertex token `{0}`")]
    BadToken(String),
    #[error("vertex `{0}` out of range")]
    OutOfRange(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("edge {0} {1} does not cross the bipartition")]
    NonCrossingEdge(String, String),
    #[error("loop at {0}")]
    Loop(String),
    #[error("vertex {0} repeated in a bag")]
    RepeatedInBag(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: ParseError,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: FormatError },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] hconvex_core::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
