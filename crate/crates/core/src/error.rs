use thiserror::Error;

/// Errors raised by the library.
///
/// `CapExceeded` is a refusal, not a failure: the caller asked for an
/// enumeration larger than the configured combinatorial limit.
/// `Inconsistent` signals a broken internal invariant and should never
/// be seen in practice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: String, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} is not in the selected lattice")]
    NotInLattice(Vec<i64>),

    #[error("refused: combinatorial cap ({what}: required {required}, cap {cap})")]
    CapExceeded {
        what: &'static str,
        required: String,
        cap: String,
    },

    #[error("empty Casimir class")]
    EmptyClass,

    #[error("unsupported isotropy mode: {0}")]
    UnsupportedK(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("mismatched root systems")]
    RootSystemMismatch,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("metric parameter is not positive definite")]
    NotPositiveDefinite,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
