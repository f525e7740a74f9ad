use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violates a precondition (non-positive input, empty
    /// interval, point outside the domain, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid weight vector for a weighted mean.
    #[error("invalid weights: {0}")]
    Weights(String),

    /// Expression syntax error, with the byte offset of the offending token.
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    /// Division by the zero element of the field.
    #[error("division by zero element")]
    DivisionByZero,

    /// Numeric evaluation failed (denominator vanishes at the assignment,
    /// value outside the representable range, ...).
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// A probe input cannot be shaped into field-valued quantities.
    #[error("input shaping error: {0}")]
    InputShaping(String),
}

pub type Result<T> = std::result::Result<T, Error>;
