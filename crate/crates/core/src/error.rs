use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("edge list does not form a tree: {0}")]
    InvalidTree(String),
    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a spider needs at least one leg")]
    EmptySpider,
    #[error("spider leg {index} has length 0; legs must be positive")]
    ZeroLengthLeg { index: usize },
    #[error("need at least {needed} legs, got {got}")]
    TooFewLegs { needed: usize, got: usize },
    #[error("start label {label} outside [0, {bound}]")]
    LabelOutOfRange { label: usize, bound: usize },
    #[error("cannot compare trees on {left} and {right} vertices")]
    UnequalSizes { left: usize, right: usize },
    #[error("n = {n} outside the supported range 1..={max}")]
    UnsupportedSize { n: usize, max: usize },
    #[error("malformed level sequence: {0}")]
    LevelSequence(String),
}
