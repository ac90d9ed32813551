use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("evaluation point s = {point} is a pole of {value}")]
    PoleAtPoint { value: String, point: String },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("symbol {0} does not belong to the alphabet this operation expects")]
    AlphabetMismatch(String),
    #[error("truncation order {order} is below the minimum {min}")]
    TruncationTooSmall { order: u32, min: u32 },
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
