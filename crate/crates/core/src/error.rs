use thiserror::Error;

use crate::numeric::SeriesResult;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = 1 (|s - 1| = {distance:e} is inside the guard radius)")]
    Pole { distance: f64 },

    /// The kernel ran out of terms before reaching its tolerance. The best
    /// available estimate travels with the error.
    #[error("no convergence after {} terms (err estimate {})", .0.terms_used, .0.err_estimate.to_f64())]
    NonConvergence(Box<SeriesResult>),

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("precision error: {0}")]
    Precision(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }

    /// Partial result carried by a `NonConvergence` error.
    pub fn partial(&self) -> Option<&SeriesResult> {
        match self {
            Error::NonConvergence(r) => Some(r),
            _ => None,
        }
    }
}
