use thiserror::Error;

/// Domain errors for simplex points, marginal evaluations and samplers.
///
/// Every variant names the precondition it violates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension n = {0} out of range: n must be at least 2")]
    DimensionTooSmall(usize),

    #[error("step index j = {j} out of range: must satisfy 1 <= j <= n - 1 (n = {n})")]
    StepOutOfRange { j: usize, n: usize },

    #[error("remaining mass r = {0} out of range: must satisfy 0 < r <= 1")]
    RemainingMassOutOfRange(f64),

    #[error("abscissa x = {x} out of range: must satisfy 0 <= x <= r (r = {r})")]
    AbscissaOutOfRange { x: f64, r: f64 },

    #[error("uniform deviate xi = {0} out of range: must satisfy 0 <= xi < 1")]
    UniformOutOfRange(f64),

    #[error("coordinate {index} = {value} outside [0, 1]")]
    CoordinateOutOfRange { index: usize, value: f64 },

    #[error("coordinates sum to {sum}, more than {tolerance} away from 1")]
    SumNotOne { sum: f64, tolerance: f64 },

    #[error("coordinate {index} is not finite")]
    CoordinateNotFinite { index: usize },

    #[error("rejection budget exhausted after {trials} trials (n = {n}, acceptance decays like 1/(n-1)!)")]
    RejectionBudgetExhausted { trials: u64, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
