use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),

    #[error("adjacency matrix is not a simple graph: {0}")]
    NotSimple(String),

    #[error("graphs on zero vertices are not supported")]
    EmptyGraph,

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("stabilizer line {line}: {reason}")]
    PauliLine { line: usize, reason: String },

    #[error("expected {expected} stabilizer generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("stabilizer generators on lines {lines:?} are linearly dependent")]
    RankDeficient { lines: Vec<usize> },

    #[error("stabilizer generators on lines {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },

    #[error("generator matrix is invalid: {0}")]
    InvalidGenerator(String),

    #[error("local Clifford quadruple for qubit {qubit} has determinant zero")]
    Inadmissible { qubit: usize },

    #[error("stabilizer reduction made no progress: {0}")]
    NoProgress(String),

    #[error("n = {n} exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("internal verification failure: {0}")]
    Internal(String),
}
