use thiserror::Error;

use crate::numerics::EvalResult;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at x = {x}")]
    Pole { x: f64 },

    /// The evaluation budget ran out before the requested tolerance was met.
    /// `best` still holds the best available estimate with its honest bound.
    #[error("tolerance {tol:e} not reached (best bound {:e})", best.error_bound)]
    TolNotReached { tol: f64, best: EvalResult },

    #[error("non-finite sample at x = {x}")]
    NonFiniteSample { x: f64 },

    #[error("Bernoulli table exhausted: index {index} > {max}")]
    TableExhausted { index: usize, max: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Best estimate carried by a `TolNotReached`, if any.
    pub fn best_estimate(&self) -> Option<&EvalResult> {
        match self {
            Error::TolNotReached { best, .. } => Some(best),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
