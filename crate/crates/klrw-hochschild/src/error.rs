use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochschildError {
    #[error("expected a generator of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{value} is not a basis vector of {module} at the ends of {gen}")]
    ValueOutsideModule { gen: String, value: String, module: String },
    #[error("{0}")]
    ClassOutsideModule(String),
    #[error("no closed-form family for {0}")]
    NoExplicitFamily(String),
    #[error("theta needs {expected} entries, found {found}")]
    ThetaLength { expected: usize, found: usize },
    #[error("cochain is not homogeneous in the requested slice")]
    NotHomogeneous,
    #[error("coefficient does not fit in a machine rational")]
    Overflow,
    #[error("invalid bimodule {0}")]
    InvalidModule(String),
}
