//! Goodness-of-fit machinery: certifies that a generator is uniform on the
//! simplex (against analytic marginals, an exact oracle, the probability
//! integral transform and moment targets) and demonstrably rejects the
//! negative controls.

mod chi_square;
mod ks;
mod moments;
mod pit;

pub use chi_square::chi_square_marginal;
pub use ks::{kolmogorov_critical, ks_one_sample, ks_two_sample};
pub use moments::{moment_check, MomentCheck, MomentReport};
pub use pit::pit_transform;

use thiserror::Error;

/// Usage errors raised by the verification instruments.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("sample of {len} values is too small: need at least {min}")]
    SampleTooSmall { len: usize, min: usize },

    #[error("sample is empty")]
    EmptySample,

    #[error("sample contains a non-finite value")]
    NonFiniteValue,

    #[error("target CDF returned {value}, outside [0, 1]")]
    CdfOutOfRange { value: f64 },

    #[error("{bins} bins is too few: need at least {min}")]
    TooFewBins { bins: usize, min: usize },

    #[error("expected bin count {expected:.2} too small: need at least {min}")]
    ExpectedCountTooSmall { expected: f64, min: f64 },

    #[error("batch of {len} points is too small: need at least {min}")]
    BatchTooSmall { len: usize, min: usize },

    #[error("batch mixes dimensions {first} and {other}")]
    MixedDimensions { first: usize, other: usize },

    #[error(transparent)]
    Domain(#[from] crate::error::Error),
}

/// Supported significance levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alpha {
    FivePercent,
    #[default]
    OnePercent,
}

impl Alpha {
    pub fn level(self) -> f64 {
        match self {
            Alpha::FivePercent => 0.05,
            Alpha::OnePercent => 0.01,
        }
    }
}

impl std::fmt::Display for Alpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Alpha::FivePercent => f.write_str("0.05"),
            Alpha::OnePercent => f.write_str("0.01"),
        }
    }
}

impl std::str::FromStr for Alpha {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "0.05" => Ok(Alpha::FivePercent),
            "0.01" => Ok(Alpha::OnePercent),
            other => Err(format!("unsupported alpha `{other}` (expected 0.05 or 0.01)")),
        }
    }
}

/// A sorted, finite sample of scalar observations.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalSample {
    values: Vec<f64>,
}

impl EmpiricalSample {
    /// Sorts the values; rejects empty or non-finite input.
    pub fn new(mut values: Vec<f64>) -> Result<Self, VerifyError> {
        if values.is_empty() {
            return Err(VerifyError::EmptySample);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(VerifyError::NonFiniteValue);
        }
        values.sort_unstable_by(f64::total_cmp);
        Ok(Self { values })
    }

    /// Extract coordinate `coord` from a batch of points.
    pub fn from_coordinate(
        points: &[crate::point::SimplexPoint],
        coord: usize,
    ) -> Result<Self, VerifyError> {
        Self::new(points.iter().map(|p| p[coord]).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values in non-decreasing order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Outcome of a single statistical test.
#[derive(Debug, Clone)]
pub struct TestReport {
    pub name: &'static str,
    pub statistic: f64,
    pub critical_value: f64,
    pub alpha: Alpha,
    pub sample_sizes: (usize, Option<usize>),
    pub pass: bool,
}

impl TestReport {
    fn new(
        name: &'static str,
        statistic: f64,
        critical_value: f64,
        alpha: Alpha,
        sample_sizes: (usize, Option<usize>),
    ) -> Self {
        Self {
            name,
            statistic,
            critical_value,
            alpha,
            sample_sizes,
            pass: statistic < critical_value,
        }
    }
}

impl std::fmt::Display for TestReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sizes = match self.sample_sizes {
            (n, Some(m)) => format!("{n}/{m}"),
            (n, None) => format!("{n}"),
        };
        write!(
            f,
            "{:<14} stat={:<12.6} crit={:<12.6} alpha={} N={:<12} {}",
            self.name,
            self.statistic,
            self.critical_value,
            self.alpha,
            sizes,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}
