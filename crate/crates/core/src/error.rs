use thiserror::Error;

/// Errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("letter x{letter} out of range for dimension {dim}")]
    LetterOutOfRange { letter: usize, dim: usize },

    #[error("ambient dimension must be at least 1")]
    EmptyBasis,

    #[error("1 ≺ 1 is not defined")]
    Undefined11,

    #[error("element has a nonzero component on the unit")]
    NotAugmentation,

    #[error("λ index {index} is beyond the explicit prefix (last index {last})")]
    IndexBeyondPrefix { index: usize, last: usize },

    #[error("g′(λ,μ) is not degree-graded and has no λ-sequence")]
    NotGraded,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("structure constants are not preLie: triple (e{0}, e{1}, e{2}) breaks the identity")]
    NotPreLie(usize, usize, usize),

    #[error("malformed structure data: {0}")]
    Malformed(String),

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("structure has no half-shuffle product")]
    MissingHalfShuffle,

    #[error("structure has no coproduct")]
    MissingCoproduct,

    #[error("{input} • 1 = {image} is not primitive")]
    NonPrimitiveImage { input: String, image: String },

    #[error("primitive closure needs f_A = 0, but {0}")]
    PreconditionFA(String),

    #[error("presentation check does not apply to {0}")]
    WrongFamily(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
