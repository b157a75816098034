use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants map onto the CLI exit codes: invalid input, budget refusal and
/// verification mismatch are kept distinct so callers can tell them apart.
#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible Cartan type {0}")]
    InadmissibleType(String),

    #[error("{what} of size {needed} exceeds the budget of {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("invalid parabolic: {0}")]
    InvalidParabolic(String),

    #[error("element {word:?} is not a minimal coset representative for Levi {levi:?}")]
    NotMinimalRep { word: Vec<usize>, levi: Vec<usize> },

    #[error("dimension condition violated: codimensions sum to {sum}, expected {expected}")]
    DimensionMismatch { sum: usize, expected: usize },

    #[error("tuple is not L-movable: {0}")]
    NotLMovable(String),

    #[error("input is not dominant: {0}")]
    NonDominant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification mismatch: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status: 2 invalid input, 3 budget refusal, 4 verification mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::Mismatch(_) => 4,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
