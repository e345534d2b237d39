use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the compsem toolchain.
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{context}:{line}: {message}")]
    Parse {
        context: String,
        line: usize,
        message: String,
    },

    #[error("no parsable source files under {0}")]
    EmptyProject(PathBuf),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quality function undefined: {0}")]
    UndefinedQuality(String),

    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    #[error("embeddings missing for {} node(s): {}", missing.len(), missing.join(", "))]
    Alignment { missing: Vec<String> },

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(context: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            line,
            message: message.into(),
        }
    }

    /// Short machine-readable code used in reports.
    pub fn reason_code(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Parse { .. } => "parse",
            Error::EmptyProject(_) => "empty_project",
            Error::InvalidGraph(_) => "invalid_graph",
            Error::Domain(_) => "domain",
            Error::UndefinedQuality(_) => "undefined_quality",
            Error::UndefinedMetric(_) => "undefined_metric",
            Error::Alignment { .. } => "alignment",
            Error::Config(_) => "config",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
