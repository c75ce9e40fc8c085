//! Error type shared by the analytic modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpecialError {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {msg}")]
    Domain { msg: String },
    /// Evaluation point outside a sampled grid.
    #[error("argument {u} outside sampled range [{lo}, {hi}]")]
    OutOfRange { u: f64, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, SpecialError>;
