use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("edge {index} is invalid: {reason}")]
    InvalidEdge { index: usize, reason: String },

    #[error("duplicate edge {index} (multi-edges not enabled)")]
    DuplicateEdge { index: usize },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("edge index {index} out of range (edge count {count})")]
    EdgeOutOfRange { index: usize, count: usize },

    #[error("hypergraph is not connected")]
    Disconnected,

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("hypergraph is not a hypertree")]
    NotHypertree,

    #[error("hypergraph is not simple")]
    NotSimple,

    #[error("edge {0} is not a 2-bridge")]
    NotTwoBridge(usize),

    #[error("hypergraph is not reducible: edge {0} has no leaf vertex")]
    Irreducible(usize),

    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector must be nonnegative and nonzero")]
    ZeroVector,

    #[error("value must be positive, got {0}")]
    NonPositive(String),

    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),

    #[error("vertex count {count} exceeds the canonical form bound {bound}")]
    SizeBound { count: usize, bound: usize },

    #[error("certificate entry ({vertex}, {edge}) is not an incidence")]
    EntryOutsideIncidence { vertex: usize, edge: usize },

    #[error("certificate has no entry for incidence ({vertex}, {edge})")]
    MissingEntry { vertex: usize, edge: usize },

    #[error("certificate entry ({vertex}, {edge}) is not positive")]
    NonPositiveEntry { vertex: usize, edge: usize },

    #[error("bad family parameters for {family}: {reason}")]
    BadFamily { family: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}
