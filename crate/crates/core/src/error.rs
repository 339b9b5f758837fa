use thiserror::Error;

/// Errors produced by the cipher, its analysis suite and the image codec.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid key: {0}")]
    InvalidKey(String),

    /// The Chen trajectory left the finite range. `step` counts RK4 steps from the initial condition.
    #[error("Chen trajectory diverged at integration step {step}")]
    Divergence { step: usize },

    #[error("value {value} outside domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("dimensions {width}x{height} do not describe {len} pixels")]
    Dimensions {
        width: usize,
        height: usize,
        len: usize,
    },

    #[error("image shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("malformed PGM at byte {offset}: {message}")]
    Pgm { offset: usize, message: String },

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
