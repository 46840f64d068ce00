use thiserror::Error;

/// Errors raised by monoid, semigroup, and linear-algebra operations.
///
/// Domain errors (`TrivialMonoid`, `ZeroElement`, `NotIndexOne`, ...) signal
/// that a precondition of the requested operation does not hold; they are
/// ordinary results, not bugs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDimension,

    #[error("coordinate index {index} out of range 1..={k}")]
    CoordOutOfRange { index: usize, k: usize },

    #[error("coordinate set must be nonempty")]
    EmptyCoordSet,

    #[error("operation requires a nontrivial monoid")]
    TrivialMonoid,

    #[error("the zero element has no primitive decomposition")]
    ZeroElement,

    #[error("no monoid of dimension {requested} is isomorphic to this one (index is {minimum})")]
    EmbedDimensionTooSmall { requested: usize, minimum: usize },

    #[error("requested {requested} independent columns but the rank is {available}")]
    InsufficientRank { requested: usize, available: usize },

    #[error("monoid has index >= 2; this operation is defined for index 1 only")]
    NotIndexOne,

    #[error("a numerical semigroup needs at least one positive generator")]
    EmptyGenerators,

    #[error("numerical semigroup generators must be positive")]
    ZeroGenerator,

    #[error("minor enumeration is limited to {limit}x{limit} matrices, got {rows}x{cols}")]
    MinorGuard {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("magnitude out of supported range: {0}")]
    Magnitude(String),
}

pub type Result<T> = std::result::Result<T, Error>;
