//! Crate-wide error type.

use serde::{Deserialize, Serialize};

pub type Result<T> = std::result::Result<T, Error>;

/// Machine-readable witness attached to a failed verification.
///
/// A `Certificate` records which check failed and enough detail to
/// reproduce the failing instance; it is surfaced through CLI reports
/// rather than swallowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub details: String,
}

impl Certificate {
    pub fn new(check: impl Into<String>, details: impl Into<String>) -> Self {
        Certificate {
            check: check.into(),
            details: details.into(),
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.details)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("algebra has no involution")]
    NoInvolution,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("verification failed — {0}")]
    Verification(Certificate),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn certificate(check: impl Into<String>, details: impl Into<String>) -> Self {
        Error::Verification(Certificate::new(check, details))
    }
}
