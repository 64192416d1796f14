use thiserror::Error;

/// Errors raised while building or reading graphs and families.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex set {0} is not stable")]
    NotStable(crate::VertexSet),

    #[error("sets overlap on {0}")]
    Overlap(crate::VertexSet),

    #[error("invalid parameters for {family}: {message}")]
    InvalidParameter { family: String, message: String },

    #[error("unknown graph or family `{0}`")]
    UnknownFamily(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn param(family: &str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            family: family.to_string(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
