use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("invalid Frobenius coordinates: arms {arms:?}, legs {legs:?}")]
    InvalidFrobenius { arms: Vec<u32>, legs: Vec<u32> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {weight} exceeds the configured maximum {max}")]
    WeightBound { weight: u64, max: u32 },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("cochain `{name}` is not {flag}")]
    NotNormalized { name: String, flag: &'static str },
    #[error("`{name}` failed the {check} check: {witness}")]
    CheckFailed {
        name: String,
        check: &'static str,
        witness: String,
    },
    #[error("series pair {0} is not mutually inverse")]
    NotInversePair(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
