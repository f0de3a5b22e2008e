//! Shared error type.
//!
//! Two failure modes cover the whole crate: malformed input (shape or
//! validation errors on data) and bound overflow (a construction left the
//! declared grade/arity/degree/vertex window). Law *violations* are not
//! errors — validators return reports so callers can print them.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A construction escaped its declared bound; nothing was silently dropped.
    #[error("bound overflow: {0}")]
    BoundOverflow(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn overflow(msg: impl Into<String>) -> Self {
        Error::BoundOverflow(msg.into())
    }
}
