use thiserror::Error;

/// Errors raised by the geometry kernel, the counting routines and the
/// file readers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate point at positions {0} and {1}")]
    DuplicatePoint(usize, usize),

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("all points are collinear")]
    AllCollinear,

    #[error("expected {expected} points, got {got}")]
    WrongCardinality { expected: usize, got: usize },

    #[error("equal turn fractions {0}")]
    EqualFractions(String),

    #[error("turn fraction {0} is outside [0, 1)")]
    FractionOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("cannot compare lengths from different ground families ({0} vs {1})")]
    CrossFamily(&'static str, &'static str),

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input text rather than by the
    /// content it describes.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
