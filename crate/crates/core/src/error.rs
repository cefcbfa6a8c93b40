use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("index {index} out of range 1..={len}")]
    Index { index: usize, len: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid block coordinates: {0}")]
    InvalidBlock(String),

    #[error(
        "no atypical value reproduces height {height} for root {root} within {radius} candidates"
    )]
    InconsistentHeight {
        root: usize,
        height: i64,
        radius: i64,
    },

    #[error("weights {0} and {1} are not comparable in the block order")]
    Incomparable(String, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource limit exceeded: {0}")]
    ResourceCap(String),

    #[error("composition multiplicity {mult} of {factor} is not 0 or 1")]
    NotMultiplicityFree { factor: String, mult: i64 },

    #[error("character is not a finite combination of irreducibles after {0} steps")]
    NotInSpan(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Resource-style failures (caps, non-termination) as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap(_) | Error::NotInSpan(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
