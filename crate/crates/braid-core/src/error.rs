use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandCountMismatch(usize, usize),
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("keep set must be nonempty")]
    EmptyKeepSet,
    #[error("braid is not 1-pure")]
    NotOnePure,
    #[error("permutation degree {0} does not match expected {1}")]
    DegreeMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("word does not carry the standard curve system to a standard system")]
    NotStandardlyReduced,
    #[error("search bound exceeded (inconclusive)")]
    BoundExceeded,
    #[error("braid is not periodic")]
    NotPeriodic,
    #[error("input is central")]
    CentralInput,
    #[error("exterior braid is not periodic")]
    NotPeriodicExterior,
    #[error("exterior braid is central")]
    CentralExterior,
    #[error("exterior braids differ")]
    ExteriorMismatch,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("no standard reduction system found; supply a reduction hint")]
    HintRequired,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("not a member of the subgroup")]
    NotMember,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
