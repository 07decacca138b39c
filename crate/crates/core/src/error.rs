use thiserror::Error;

/// Errors produced by embedding, symbolization and estimation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series is empty")]
    EmptySeries,

    #[error("series `{name}` has a non-finite value at index {index}")]
    NonFinite { name: String, index: usize },

    #[error("series too short: need at least {required} samples, got {actual}")]
    SeriesTooShort { required: usize, actual: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("alphabet size overflows 64-bit integers")]
    Overflow,

    #[error("no embedding dimension m >= 2 satisfies {n} > 5*m!")]
    NoValidM { n: u64 },

    #[error("k-means needs at least {k} windows, got {windows}")]
    TooFewWindows { k: usize, windows: usize },

    #[error("symbol sequences differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("symbol sequence of length {len} is too short for horizon {delta}")]
    TooShort { len: usize, delta: usize },

    #[error("joint counts are empty")]
    EmptyCounts,

    #[error("window length {window_len} is below the minimum {required}")]
    WindowTooSmall { window_len: usize, required: usize },

    #[error("traces have different window schedules")]
    ScheduleMismatch,

    #[error("logistic state left (0, 1) at step {step}")]
    DegenerateDynamics { step: usize },

    #[error("plug-in transfer entropy came out negative ({0}); counts are inconsistent")]
    NegativeTransferEntropy(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
