use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{family} requires {parameter} >= {min}, got {got}")]
    BelowBound {
        family: &'static str,
        parameter: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{what}: order {order} exceeds guard {limit}; pass an explicit override to proceed")]
    GuardExceeded {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set universe {set} does not match graph order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("empty list of parts")]
    EmptyParts,
    #[error("invalid polynomial: {0}")]
    Polynomial(String),
    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// True for errors raised by a size guard rather than by bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::GuardExceeded { .. } | Error::OrderTooLarge { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
