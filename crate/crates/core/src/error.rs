use thiserror::Error;

/// Errors raised by the symbolic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("touch composition {touch} is not finer than {alpha}")]
    NotRefined { touch: String, alpha: String },

    #[error("word {word} is not compatible with path {path}")]
    IncompatibleWord { word: String, path: String },

    #[error("{nvars} variables cannot faithfully represent degree {degree}")]
    Lossy { nvars: usize, degree: usize },

    #[error("alphabet requires unbounded degree: {0}")]
    UnboundedAlphabet(String),

    #[error("specialization hits a pole: {0}")]
    Pole(String),

    #[error("not a Laurent series in z: {0}")]
    NotLaurentInZ(String),

    #[error("linear system is singular")]
    Singular,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
