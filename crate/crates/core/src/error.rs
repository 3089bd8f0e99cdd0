use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HostError {
    #[error("degenerate host: {0}")]
    Degenerate(String),
    #[error("host with {0} vertices exceeds the supported size")]
    TooLarge(u32),
    #[error("{0:?} is not an edge of the host")]
    NotAnEdge([u32; 3]),
    #[error("edge id {id} out of range (host has {edges} edges)")]
    OutOfRange { id: u32, edges: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("coloring has {got} entries but the host has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("bad host: {0}")]
    BadHost(String),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge([u32; 3]),
    #[error("{0:?} is not an edge of the host")]
    NonEdge([u32; 3]),
    #[error("missing edge {0:?}")]
    MissingEdge([u32; 3]),
    #[error("empty input")]
    Empty,
}

impl ParseError {
    pub(crate) fn new(line: usize, reason: ParseErrorKind) -> Self {
        Self { line, reason }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name {0:?}")]
    UnknownName(String),
    #[error("pattern must have between 1 and {max} vertices, got {got}")]
    VertexCount { got: usize, max: usize },
    #[error("pattern edge {0:?} is not a set of 3 distinct template vertices")]
    BadEdge([u32; 3]),
    #[error("template vertex {0} is not covered by any edge")]
    IsolatedVertex(u32),
    #[error("duplicate pattern edge {0:?}")]
    DuplicateEdge([u32; 3]),
    #[error("pattern has no edges")]
    NoEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad parameters: {0}")]
pub struct BadParameters(pub String);
