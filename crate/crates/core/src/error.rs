use alloc::boxed::Box;
use alloc::string::String;

use crate::arith::ApproxScalar;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs was violated (singular parameter,
    /// zero polynomial, unbalanced series, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A lower parameter reached a nonpositive integer before the series terminated.
    #[error("lower parameter `{parameter}` hits a pole at term {term}")]
    Pole { parameter: String, term: usize },

    /// A construction that must succeed algebraically did not (nonzero
    /// remainder in an exact division, failed symmetry assertion, ...).
    #[error("internal consistency error: {0}")]
    Consistency(String),

    /// Numeric summation did not meet the requested tail bound.
    #[error("series did not converge within {terms} terms (last partial sum {partial})")]
    Convergence { terms: usize, partial: Box<ApproxScalar> },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// True for errors caused by the chosen parameter values (as opposed to
    /// a failure of the algebra itself); randomized suites resample on these.
    pub fn is_singular(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Pole { .. })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
