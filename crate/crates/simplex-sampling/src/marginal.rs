//! Per-step marginal law of a uniform simplex point.
//!
//! At step `j` of the sequential construction, with remaining mass `r`, the
//! coordinate has density `k (r - x)^(k-1) / r^k` on `[0, r]`, CDF
//! `1 - ((r - x)/r)^k` and inverse CDF `r (1 - (1 - xi)^(1/k))`, where `k`
//! is the step exponent selected by [`MarginalModel`].

use crate::error::{Error, Result};
use crate::point::SimplexPoint;

/// Exponent family for the per-step marginal law.
///
/// * `Corrected` (default): step-dependent exponent `k = n - j`, the one
///   implied by the volume of the rescaled sub-simplex left after step `j`.
///   Produces exactly uniform simplex points.
/// * `PaperLiteral`: constant exponent `k = n - 1` for every step. Retained
///   as a negative control: for `n >= 3` its output is not uniform, and the
///   statistical harness demonstrates that empirically. Both families agree
///   at `j = 1` and at `n = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MarginalModel {
    #[default]
    Corrected,
    PaperLiteral,
}

impl MarginalModel {
    /// CDF exponent at step `j`; the density exponent is this minus one.
    #[inline]
    pub fn cdf_exponent(self, n: usize, j: usize) -> usize {
        match self {
            MarginalModel::Corrected => n - j,
            MarginalModel::PaperLiteral => n - 1,
        }
    }
}

fn check_step(n: usize, j: usize, r: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if j < 1 || j > n - 1 {
        return Err(Error::StepOutOfRange { j, n });
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::RemainingMassOutOfRange(r));
    }
    Ok(())
}

/// Density of the step-`j` coordinate at `x`, given remaining mass `r`.
///
/// Integrates to 1 over `[0, r]`; the degenerate exponent (final corrected
/// step, or any step at `n = 2`) yields the uniform density `1/r`.
pub fn marginal_pdf(model: MarginalModel, n: usize, j: usize, r: f64, x: f64) -> Result<f64> {
    check_step(n, j, r)?;
    if !(x >= 0.0 && x <= r) {
        return Err(Error::AbscissaOutOfRange { x, r });
    }
    let k = model.cdf_exponent(n, j);
    if k == 1 {
        return Ok(1.0 / r);
    }
    Ok(k as f64 * (r - x).powi(k as i32 - 1) / r.powi(k as i32))
}

/// Cumulative distribution of the step-`j` coordinate: `1 - ((r - x)/r)^k`.
///
/// Exactly 0 at `x = 0` and exactly 1 at `x = r`, monotone in between.
pub fn marginal_cdf(model: MarginalModel, n: usize, j: usize, r: f64, x: f64) -> Result<f64> {
    check_step(n, j, r)?;
    if !(x >= 0.0 && x <= r) {
        return Err(Error::AbscissaOutOfRange { x, r });
    }
    let k = model.cdf_exponent(n, j);
    if k == 1 {
        return Ok(x / r);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // log1p/expm1 keep full relative accuracy near both endpoints, which the
    // probability-integral-transform round trip relies on.
    Ok(-f64::exp_m1(k as f64 * f64::ln_1p(-(x / r))))
}

/// Inverse CDF: maps a uniform deviate `xi` in `[0, 1)` to `[0, r]`.
///
/// The unit exponent is special-cased to a plain rescale `r * xi`, so only
/// steps with `k >= 2` cost a fractional-power evaluation.
pub fn inverse_cdf(model: MarginalModel, n: usize, j: usize, r: f64, xi: f64) -> Result<f64> {
    let mut scratch = 0;
    inverse_cdf_counted(model, n, j, r, xi, &mut scratch)
}

/// As [`inverse_cdf`], incrementing `fractional_powers` when the evaluation
/// needs a fractional power (exponent `1/k` with `k >= 2`).
pub(crate) fn inverse_cdf_counted(
    model: MarginalModel,
    n: usize,
    j: usize,
    r: f64,
    xi: f64,
    fractional_powers: &mut u64,
) -> Result<f64> {
    check_step(n, j, r)?;
    if !(0.0..1.0).contains(&xi) {
        return Err(Error::UniformOutOfRange(xi));
    }
    let k = model.cdf_exponent(n, j);
    if k == 1 {
        return Ok(r * xi);
    }
    *fractional_powers += 1;
    Ok(-r * f64::exp_m1(f64::ln_1p(-xi) / k as f64))
}

/// Bookkeeping of the sequential construction: dimension `n`, current step
/// `j` and remaining mass `r_j` (with `r_1 = 1` and `r_{j+1} = r_j - x_j`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepState {
    n: usize,
    j: usize,
    remaining: f64,
}

impl StepState {
    /// State before the first draw: `j = 1`, full mass remaining.
    pub fn first(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        Ok(Self {
            n,
            j: 1,
            remaining: 1.0,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Current step index `j`; runs from 1 to `n - 1`, then `n` once the
    /// state holds only the residual.
    pub fn step(&self) -> usize {
        self.j
    }

    /// Remaining mass `r_j`.
    pub fn remaining(&self) -> f64 {
        self.remaining
    }

    pub fn is_final_step(&self) -> bool {
        self.j == self.n - 1
    }

    /// Consume coordinate `x_j` and move to step `j + 1`.
    pub fn advance(&mut self, x: f64) -> Result<()> {
        if self.j > self.n - 1 {
            return Err(Error::StepOutOfRange {
                j: self.j,
                n: self.n,
            });
        }
        if !(x >= 0.0 && x <= self.remaining) {
            return Err(Error::AbscissaOutOfRange {
                x,
                r: self.remaining,
            });
        }
        self.remaining -= x;
        self.j += 1;
        Ok(())
    }
}

/// Walk the first `n - 1` coordinates of `point`, replaying the remaining
/// mass recursion, and visit `(state, x_j)` at each step.
pub(crate) fn walk_point<F>(point: &SimplexPoint, mut visit: F) -> Result<()>
where
    F: FnMut(&StepState, f64) -> Result<()>,
{
    let mut state = StepState::first(point.dim())?;
    for j in 0..point.dim() - 1 {
        let x = point[j];
        visit(&state, x)?;
        state.advance(x)?;
    }
    Ok(())
}

/// Product of the per-step marginal densities along `point`.
///
/// Under `Corrected` this telescopes to the constant `(n-1)!` at every
/// interior point, the density of the uniform law in the first `n - 1`
/// coordinates. Under `PaperLiteral` it varies with the point. Overflows for
/// large `n`; see [`chain_log_density`].
pub fn chain_density(model: MarginalModel, point: &SimplexPoint) -> Result<f64> {
    let mut product = 1.0;
    walk_point(point, |state, x| {
        product *= marginal_pdf(model, state.dimension(), state.step(), state.remaining(), x)?;
        Ok(())
    })?;
    Ok(product)
}

/// Natural logarithm of [`chain_density`], safe for large `n`.
pub fn chain_log_density(model: MarginalModel, point: &SimplexPoint) -> Result<f64> {
    let mut log_sum = 0.0;
    walk_point(point, |state, x| {
        let (n, j, r) = (state.dimension(), state.step(), state.remaining());
        check_step(n, j, r)?;
        if !(x >= 0.0 && x <= r) {
            return Err(Error::AbscissaOutOfRange { x, r });
        }
        let k = model.cdf_exponent(n, j);
        log_sum += if k == 1 {
            -r.ln()
        } else {
            (k as f64).ln() + (k as f64 - 1.0) * (r - x).ln() - k as f64 * r.ln()
        };
        Ok(())
    })?;
    Ok(log_sum)
}
