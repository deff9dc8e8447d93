//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A numeric argument fell outside its legal range.
    #[error("{what} must be in {range}, got {got}")]
    Domain {
        what: &'static str,
        range: &'static str,
        got: f64,
    },

    #[error("empty sample")]
    EmptySample,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown variable id {0}")]
    UnknownVariable(usize),

    #[error("requested {requested} edges but only {available} forward pairs exist")]
    TooManyEdges { requested: usize, available: usize },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("invalid probability table: {0}")]
    InvalidTable(String),

    #[error("credal row {row} of variable {variable} is infeasible: {reason}")]
    InfeasibleRow {
        variable: usize,
        row: usize,
        reason: String,
    },

    #[error("cannot draw {requested} distinct rows from a population of {available}")]
    SampleTooLarge { requested: usize, available: usize },

    #[error("not an IDM-style credal network: {0}")]
    NotIdm(String),

    #[error("not a contamination-style credal network: {0}")]
    NotContamination(String),

    #[error("recovered count is unbounded: {0}")]
    UnboundedCount(String),

    #[error("invalid experiment config: {}", problems.join("; "))]
    InvalidConfig { problems: Vec<String> },

    #[error("usage: {0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
