//! Error type shared by every module of the crate.

use crate::gf3::F3Vector;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two vectors (or a vector and a function) live in different ambient
    /// dimensions.
    #[error("dimension mismatch: expected m = {expected}, got m = {got}")]
    DimensionMismatch { expected: u32, got: u32 },

    /// An index fell outside its documented range.
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: u64, lo: u64, hi: u64 },

    /// A parameter violated a documented bound; the message names the bound.
    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    /// An exponential-cost path was refused; the message reports what budget
    /// would be required and which environment variable raises it.
    #[error(
        "budget exceeded: {operation} at m = {requested} needs the cap raised to \
         at least {requested} (current cap {cap}, override with {env})"
    )]
    BudgetExceeded {
        operation: &'static str,
        requested: u32,
        cap: u32,
        env: &'static str,
    },

    /// The function table coincides with a linear form w·x, so the code
    /// construction would be rank deficient.
    #[error("function coincides with the linear form w·x for w = {w}; the construction is rank deficient")]
    LinearlyCoincident { w: F3Vector },

    /// Two routes that must agree exactly did not; always a bug, never an
    /// input problem.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
