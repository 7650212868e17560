//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the geometry, model, and solver layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A function evaluated to NaN or infinity where a finite value is required.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// A (marginal, marginal, correlator) triple leaves some outcome with a
    /// negative probability. Carries the offending outcome pair and the
    /// probability value it would have been assigned.
    #[error("positivity violated at outcome ({alpha:+}, {beta:+}): probability {value:.6e}")]
    PositivityViolation { alpha: i8, beta: i8, value: f64 },

    /// A raw probability table has marginals that depend on the remote
    /// setting, so it does not describe a non-signaling correlation.
    #[error("signaling input: {0}")]
    Signaling(String),

    /// Visibility outside the range where the explicit Werner-state model is valid.
    #[error("visibility {visibility} outside the model's regime [0, {limit}]")]
    OutOfRegime { visibility: f64, limit: f64 },

    /// Deterministic-strategy enumeration would exceed the hard cap.
    #[error("setting count {total} exceeds the strategy enumeration cap of {cap}")]
    StrategyCapExceeded { total: usize, cap: usize },

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
