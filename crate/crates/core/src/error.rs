use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("mapping class must have determinant 1, got {0}")]
    NotUnimodular(i64),

    #[error("invalid curve component: {0}")]
    InvalidComponent(String),

    #[error("unsupported family: {0}; use the geometric dimension engine for this curve")]
    UnsupportedFamily(String),

    #[error("unsupported pairing: {0}")]
    UnsupportedPairing(String),

    #[error("pairing undefined: {0}")]
    UndefinedPairing(String),

    #[error("morphism homology did not stabilize ({0}); the inputs may be homotopic, or both may be arcs")]
    NonStabilizing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CompositionMismatch(_) => "composition_mismatch",
            Error::InvalidWord(_) => "invalid_word",
            Error::InvalidComplex(_) => "invalid_complex",
            Error::InvalidSlope(_) => "invalid_slope",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::InvalidComponent(_) => "invalid_component",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::UnsupportedPairing(_) => "unsupported_pairing",
            Error::UndefinedPairing(_) => "undefined_pairing",
            Error::NonStabilizing(_) => "non_stabilizing",
            Error::Parse(_) => "parse",
            Error::UnknownExample(_) => "unknown_example",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
