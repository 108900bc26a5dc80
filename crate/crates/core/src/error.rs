use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything the engine can fail with.
///
/// Variants fall into four classes that map onto CLI exit codes: domain
/// errors (1), resource-guard trips (2), and I/O or parse failures (3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable contexts do not match: {0}")]
    ContextMismatch(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("support of {monomial} overlaps the support of the ideal")]
    DisjointnessViolation { monomial: String },
    #[error("squarefree ideal required, found generator {0}")]
    SquarefreeRequired(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("monomial {0} is not an element of the lcm-lattice")]
    NotInLattice(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("{0} is undefined for the zero ideal")]
    UndefinedInvariant(&'static str),
    #[error("generators of I are not the disjoint union of those of J and K: {0}")]
    PartitionViolated(String),
    #[error("inequality violated (engine bug): {0}")]
    BoundViolation(String),
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("resource guard tripped: {0}")]
    Resource(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) => 2,
            Error::Parse { .. } | Error::Io { .. } | Error::Json(_) => 3,
            _ => 1,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}
