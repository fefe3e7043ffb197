use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the word-level transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation is only defined on nonempty words.
    #[error("{0} undefined on empty word")]
    EmptyWord(&'static str),

    /// A 1-based row index outside `1..=len`.
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// A context-graph chase ran out of edges before completing.
    #[error("premature dead end after {completed} of {expected} transitions")]
    PrematureDeadEnd { completed: usize, expected: usize },

    /// The pair (L, i) is not the image of any word under the sort transform.
    #[error("invalid ST image: {0}")]
    InvalidStImage(Box<Error>),

    /// A rank table or permutation that is not a bijection.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    /// A context that is not a vertex of the graph.
    #[error("context is not a vertex of the graph")]
    UnknownContext,
}
