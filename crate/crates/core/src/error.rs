use thiserror::Error;

use crate::graph::EdgeColoredGraph;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },

    #[error("line {line}: malformed edge line: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("edge color {color} outside 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },

    #[error("palette size k = {0} is not allowed (need k >= 1 for plain graphs, k >= 2 for colored ones)")]
    InvalidPalette(u32),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("vertex coloring invalid: {0}")]
    InvalidColoring(String),

    #[error("coloring is not acyclic")]
    NotAcyclic,

    #[error("coloring is not a star coloring")]
    NotStar,

    #[error("coloring is not an out-coloring of the orientation")]
    NotOutColoring,

    #[error("orientation does not match the graph")]
    OrientationMismatch,

    #[error("{what} exceeds search guard: {actual} > {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("target is not universal: no homomorphism from the witness coloring")]
    NotUniversal { witness: Box<EdgeColoredGraph> },
}

pub type Result<T> = std::result::Result<T, Error>;
