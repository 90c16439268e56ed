use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlrwError {
    #[error("the number of punctures must be at least 1")]
    NoPunctures,
    #[error("object index {index} is outside 0..={punctures}")]
    ObjectOutOfRange { index: usize, punctures: usize },
    #[error("braid index {index} is outside 1..={max}")]
    BraidIndexOutOfRange { index: usize, max: usize },
    #[error("arrow {arrow} does not exist for {punctures} punctures")]
    InvalidArrow { arrow: String, punctures: usize },
    #[error("cannot compose {left} after {right}: source {left_source} differs from target {right_target}")]
    NotComposable {
        left: String,
        right: String,
        left_source: usize,
        right_target: usize,
    },
    #[error("element mixes several hom-spaces where a single one is required")]
    MixedHomSpaces,
    #[error("{0}")]
    Invariant(String),
}
