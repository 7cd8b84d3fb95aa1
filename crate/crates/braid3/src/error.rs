use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("operation needs a nonempty word")]
    EmptyWord,
    #[error("argument must be nonzero")]
    ZeroInput,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unsupported syllable/boundary combination: {0}")]
    UnsupportedCombination(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("Newton iteration diverged: {0}")]
    NewtonDivergence(String),
    #[error("no block map available: {0}")]
    BlockUnavailable(String),
    #[error("degenerate grid: {0}")]
    GridDegenerate(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
