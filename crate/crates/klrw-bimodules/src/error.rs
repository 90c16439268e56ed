use klrw_core::KlrwError;
use klrw_resolution::ResolutionError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BimoduleError {
    #[error("a bar tensor needs at least one middle entry")]
    EmptyChain,
    #[error("{0} cannot be composed with {1}")]
    NotComposable(String, String),
    #[error("middle entry {0} is an idempotent")]
    IdempotentEntry(String),
    #[error("the bar differential is not defined in degree 0")]
    DegreeZero,
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Core(#[from] KlrwError),
}
