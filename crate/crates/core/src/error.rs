use thiserror::Error;

use crate::trees::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid leaf count {0}")]
    InvalidLeafCount(usize),
    #[error("dimension {dim} outside [0, {max}]")]
    InvalidDimension { dim: usize, max: usize },
    #[error("label {0} is not a leaf of this curve")]
    InvalidLabel(Label),
    #[error("labels must lie in 1..=63, got {0}")]
    LabelOutOfRange(Label),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("splits {0} and {1} are incompatible")]
    IncompatibleSplits(String, String),
    #[error("split {0} is not in the combinatorial type")]
    SplitAbsent(String),
    #[error("split {0} is incompatible with the combinatorial type")]
    IncompatibleSplit(String),
    #[error("type is not of codimension one (valences {0:?})")]
    NotCodimensionOne(Vec<usize>),
    #[error("invalid edge length: {0}")]
    InvalidLength(String),
    #[error("vector is not in the image of the embedding: {0}")]
    NotInImage(String),
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("fan is not pure-dimensional")]
    NotPure,
    #[error("invalid weight {0}")]
    InvalidWeight(u64),
    #[error("forgetting a leaf of a curve with {0} leaves leaves fewer than 3")]
    TooFewLeaves(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
