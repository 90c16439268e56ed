use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("expected an element of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("the homotopy series did not vanish after {iterations} steps on {input}")]
    SeriesDidNotTerminate { iterations: usize, input: String },
    #[error("path has no subword in S_{degree}")]
    NoReducibleSubpath { degree: usize },
}
