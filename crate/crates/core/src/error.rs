use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Evaluation point sits on a pole of the function.
    #[error("pole: {0}")]
    Pole(String),

    /// Arguments outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The shift parameter hits one of the points excluded by a shift formula.
    #[error("excluded parameter: alpha = {alpha} coincides with {constraint} (j = {j})")]
    Exclusion {
        alpha: f64,
        j: u32,
        constraint: String,
    },

    #[error("unsupported denominator {den}: exact values exist only for denominators {supported}")]
    UnsupportedDenominator { den: String, supported: String },

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    /// Two parameters coincide where the formula divides by their difference.
    #[error("coincident parameters: {0}")]
    Coincidence(String),

    #[error("parity error: {0}")]
    Parity(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
