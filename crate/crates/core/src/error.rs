use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid range: {0}")]
    Range(String),

    #[error("braid is not pure")]
    NotPure,

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("destabilization pattern absent")]
    DestabilizeFailed,

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
