use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} has size {size}, limit is {limit}")]
    Resource {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("sample {0} is not realizable")]
    NotRealizable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("empty equivalence class: {0}")]
    EmptyClass(String),

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Largest ground set accepted by operations that scan all of `{-,0,+}^U`.
pub const ENUMERATION_CAP: usize = 12;

/// Largest universe a sign vector can live on.
pub const MAX_ELEMENTS: usize = 64;

pub(crate) fn check_enumeration_cap(what: &'static str, size: usize) -> Result<()> {
    if size > ENUMERATION_CAP {
        return Err(Error::Resource {
            what,
            size,
            limit: ENUMERATION_CAP,
        });
    }
    Ok(())
}
