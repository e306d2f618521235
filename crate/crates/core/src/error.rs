use thiserror::Error;

/// Errors produced by the NCP library.
#[derive(Debug, Error)]
pub enum NcpError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty graph")]
    EmptyGraph,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("approximate pagerank has empty support; epsilon is too large")]
    EmptySupport,

    #[error("graph has {nodes} nodes, exhaustive enumeration is capped at {cap}")]
    OracleCap { nodes: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, NcpError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(NcpError::Domain(msg.into()))
}

pub(crate) fn parameter<T>(msg: impl Into<String>) -> Result<T> {
    Err(NcpError::Parameter(msg.into()))
}
