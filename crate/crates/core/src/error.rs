use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("precision must be at least 10 digits, got {0}")]
    Precision(u32),

    /// Raised instead of returning a value at a simple pole.
    #[error("simple pole at s = 1 ({function}), residue {residue}")]
    Pole { function: &'static str, residue: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),

    #[error("invalid parameters for {id}: {reason}")]
    InvalidParams { id: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}
