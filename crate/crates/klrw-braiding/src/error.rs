use klrw_core::KlrwError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error(transparent)]
    Core(#[from] KlrwError),
    #[error("no block from slot {from} to slot {to}")]
    SlotOutOfRange { to: usize, from: usize },
    #[error("block shifts degree by {found}, expected {expected}")]
    BlockDegree { expected: i64, found: i64 },
    #[error("{morphism} does not map T{from} to T{to}")]
    BlockEnds { morphism: String, from: usize, to: usize },
    #[error("morphisms do not compose")]
    NotComposable,
    #[error("morphisms do not share source, target and degree")]
    NotParallel,
    #[error("chains must have length 1, 2 or 3, found {0}")]
    ChainLength(usize),
}
