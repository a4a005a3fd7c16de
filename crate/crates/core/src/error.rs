//! Error type shared across the library.
//!
//! Errors are grouped by how a front end should react: `Validation`
//! failures mean the input is mathematically unusable, `Tier` failures
//! mean the answer could not be certified at the available exactness
//! tier (never a wrong answer), and `Resource` failures mean a
//! configurable bound was hit.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input violates a structural precondition (bad relation, bad
    /// family parameters, shape mismatch, unparseable expression).
    #[error("{0}")]
    Validation(String),

    /// The requested fact could not be decided at the available
    /// certification tier; retrying with a different seed or a
    /// stronger tier may help.
    #[error("{0}")]
    Tier(String),

    /// A configurable resource bound (degree sweep cap, truncation
    /// window cap) was exceeded.
    #[error("{0}")]
    Resource(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
    pub fn tier(msg: impl Into<String>) -> Self {
        Error::Tier(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
