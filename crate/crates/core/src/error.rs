use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{n} does not divide the conductor {conductor}")]
    NotDivisor { n: u32, conductor: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("scalars from different fields (conductors {0} and {1})")]
    FieldMismatch(u32, u32),
    #[error("{0} is not a primitive root of unity of the required order")]
    NotPrimitive(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("structure check failed: {0}")]
    Structure(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("filtration does not exhaust the algebra")]
    FiltrationNotExhaustive,
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
