use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),

    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("the edge ideal of an edgeless graph is the zero ideal")]
    ZeroIdeal,

    #[error("graph is not chordal; use the Hochster oracle instead")]
    NotChordal,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotTree,

    #[error("graph is complete; a complete square comes from a star")]
    CompleteGraph,

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("invalid generator order: {0}")]
    InvalidOrder(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Self {
        Error::CapExceeded { what, size, cap }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
