use std::fmt;

use thiserror::Error;

/// Line and column (both 1-based) of a position in the input text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl Location {
    pub fn of(text: &str, offset: usize) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Self { line, column }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{at}: {message}")]
    Syntax { at: Location, message: String },
    #[error("{at}: cannot compose {left} after {right}: endpoints differ")]
    Endpoints { at: Location, left: String, right: String },
}

impl ParseError {
    pub fn location(&self) -> Location {
        match self {
            ParseError::Syntax { at, .. } | ParseError::Endpoints { at, .. } => *at,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] klrw_core::KlrwError),
    #[error(transparent)]
    Nat(#[from] klrw_nattrans::NatError),
    #[error(transparent)]
    Braiding(#[from] klrw_braiding::BraidingError),
    #[error(transparent)]
    Bimodule(#[from] klrw_bimodules::BimoduleError),
    #[error(transparent)]
    Resolution(#[from] klrw_resolution::ResolutionError),
}

impl CliError {
    /// `2` for bad input, `1` for failures inside a computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Params(_) | CliError::Usage(_) | CliError::Io(_) | CliError::Core(_) => 2,
            CliError::Nat(klrw_nattrans::NatError::Unsolvable(_)) => 1,
            CliError::Nat(_) | CliError::Braiding(_) | CliError::Bimodule(_) => 2,
            CliError::Resolution(_) => 1,
        }
    }
}
