use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    Composition(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("truncation mismatch: {0}")]
    Truncation(String),
    #[error("degree {degree} outside trustworthy range 0..={valid}")]
    Range { degree: usize, valid: usize },
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("not invertible over the integers: {0}")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
