use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a non-empty text")]
    EmptyText,

    #[error("operation requires a non-empty pattern")]
    EmptyPattern,

    #[error("index {index} out of range for text of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("input already contains the sentinel symbol")]
    SentinelPresent,

    #[error("invalid parameter {param} for family {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        param: u64,
        reason: String,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    #[error("csv error: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Csv(err.to_string())
    }
}
