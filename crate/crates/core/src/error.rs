use thiserror::Error;

use crate::coloring::Color;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after {expected} payload bytes")]
    TrailingGarbage { expected: usize },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph on {0} vertices exceeds the 512-vertex cap")]
    TooManyVertices(usize),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("{what} supports at most {limit} vertices, got {n}")]
    ScopeExceeded {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("improper coloring: edge ({0}, {1}) has both ends colored {2}")]
    ImproperColoring(usize, usize, Color),
    #[error("color {color} at vertex {vertex} exceeds the palette size {k}")]
    ColorOutOfPalette { vertex: usize, color: Color, k: usize },
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("vertex order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {vertex} is not colored {i} or {j}")]
    NotInChainColors { vertex: usize, i: Color, j: Color },
    #[error("stale kempe chain: the coloring changed since the chain was extracted")]
    StaleChain,
    #[error("invalid campaign spec: {0}")]
    InvalidSpec(String),
}
