use thiserror::Error;

/// Errors produced by the library. The CLI maps each class to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("parse error at byte {offset}: expected one of {}", expected.join(", "))]
    Parse { offset: usize, expected: Vec<String> },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("presentation mismatch")]
    PresentationMismatch,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("singular matrix")]
    Singular,
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
