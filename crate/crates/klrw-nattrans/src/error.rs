use klrw_braiding::BraidingError;
use klrw_core::KlrwError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatError {
    #[error(transparent)]
    Core(#[from] KlrwError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error("natural transformations are classified in degrees 0, 1 and 2, not {0}")]
    Degree(usize),
    #[error("epsilon_0 must vanish for a braiding target")]
    EpsilonZero,
    #[error("theta has {found} entries, expected {expected}")]
    ThetaLength { expected: usize, found: usize },
    #[error("theta[{0}] must vanish")]
    ThetaForced(usize),
    #[error("morphisms do not compose")]
    NotComposable,
    #[error("chain starts at T{found}, not T{expected}")]
    SourceMismatch { expected: usize, found: usize },
    #[error("chains have length at most 4, found {0}")]
    ChainLength(usize),
    #[error("eta^3 equation has no solution on {0}")]
    Unsolvable(String),
}
