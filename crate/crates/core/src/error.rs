use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// `InvariantViolation`, `UniquenessViolation` and `TranslationGap` indicate
/// an internal inconsistency (a structural claim the algorithms rely on
/// failed to hold at runtime); they are surfaced rather than panicking so the
/// CLI can map them to a dedicated exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition does not fit in the {k} x {width} rectangle: {msg}")]
    OutOfRectangle { k: usize, width: usize, msg: String },

    #[error("black configuration does not admit move e{letter}: {msg}")]
    NotInSpecializationOrder { letter: usize, msg: String },

    #[error("structural invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unhappy checker has no unique nearest happy square: {0}")]
    UniquenessViolation(String),

    #[error("codimension mismatch: expected total {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("game-to-puzzle translation failed: {0}")]
    TranslationGap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
