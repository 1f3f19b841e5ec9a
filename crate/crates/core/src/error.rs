use thiserror::Error;

/// Errors raised by the exact computations in this crate.
///
/// `Internal` marks a violated mathematical invariant (a non-integral
/// centralizer order, an indicator outside {-1, 0, 1}, ...). Those are
/// bugs or misuse, never recoverable conditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic modulus mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("level {level} does not divide the top level {top}")]
    LevelNotDivisor { level: u32, top: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: u32, found: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("refusing to build a table of estimated size {estimate} (bound {bound})")]
    ResourceBound { estimate: u128, bound: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
