use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data (wrong vector length, out-of-range index,
    /// duplicate structure constant, degenerate construction).
    #[error("invalid input: {0}")]
    Input(String),

    /// The requested operation is not defined for this configuration,
    /// e.g. the Koszul oracle on a space with `h_dim > 0`.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// The two flag vectors do not span a plane.
    #[error("degenerate flag: {0}")]
    DegenerateFlag(String),

    /// A formula was invoked outside its hypotheses (space not naturally
    /// reductive, drift not parallel) without the force flag.
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// A direction-dependent quantity was requested at `y = 0`.
    #[error("undefined direction: {0}")]
    UndefinedDirection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
