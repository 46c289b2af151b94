use thiserror::Error;

/// Errors raised by the combinatorial engines.
///
/// Mathematical vanishing is never an error: a zero coefficient is returned
/// as a zero value. Errors signal malformed input, violated preconditions,
/// or broken internal invariants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("sequence is not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<String>),

    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("index {index} is outside [1, {ambient}]")]
    IndexOutOfRange { index: usize, ambient: usize },

    #[error("ambient mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An edge-label factor came out as `t_p - t_q` with `p >= q`.
    #[error("weight convention failure: {0}")]
    Calibration(String),

    #[error("polynomial is not invariant under t_i -> t_i + c")]
    NotTranslationInvariant,

    /// A proved statement failed to hold; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("checksum mismatch: stored {stored}, computed {computed}")]
    Checksum { stored: String, computed: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
