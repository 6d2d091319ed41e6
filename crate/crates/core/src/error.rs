use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the range the operation is defined for.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The argument lies outside the evaluation domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data violates an invariant (normalization, length, variance).
    #[error("data error: {0}")]
    Data(String),

    /// A series hit its term cap before meeting the tolerance.
    #[error("series did not converge after {terms} terms (last term {last_term:e}, partial sum {partial_sum:e})")]
    NonConvergence {
        terms: usize,
        last_term: f64,
        partial_sum: f64,
    },

    /// Cancellation in an alternating series would destroy the result.
    #[error("series is ill-conditioned: largest term {max_term:e} against sum {sum:e}")]
    IllConditioned { max_term: f64, sum: f64 },

    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: estimate {estimate:e}, error estimate {error:e} after {levels} levels")]
    Quadrature { estimate: f64, error: f64, levels: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn data(msg: impl Into<String>) -> Error {
    Error::Data(msg.into())
}
