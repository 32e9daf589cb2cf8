//! Simplex point generators: the sequential inverse-CDF sampler, three
//! exact oracles and one deliberately wrong negative control.

use crate::error::{Error, Result};
use crate::marginal::{inverse_cdf_counted, MarginalModel, StepState};
use crate::point::SimplexPoint;
use crate::source::UniformSource;

/// The available generators.
///
/// All but [`SamplerMethod::RescaledUniforms`] draw exactly uniformly on the
/// simplex; that one divides n uniforms by their sum, which is not uniform,
/// and is kept only as a negative control for the statistical harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplerMethod {
    /// Sequential inverse-CDF construction; n - 1 draws per point.
    StickBreaking,
    /// Draw from the cube until the coordinates fit; exact but the
    /// acceptance rate decays like 1/(n-1)!.
    RejectionCube,
    /// Gaps between sorted uniforms; n - 1 draws per point.
    SortedSpacings,
    /// Normalized exponential variates; n draws per point.
    ExponentialNormalize,
    /// Uniforms divided by their sum. Not uniform on the simplex.
    RescaledUniforms,
}

impl SamplerMethod {
    pub const ALL: [SamplerMethod; 5] = [
        SamplerMethod::StickBreaking,
        SamplerMethod::RejectionCube,
        SamplerMethod::SortedSpacings,
        SamplerMethod::ExponentialNormalize,
        SamplerMethod::RescaledUniforms,
    ];

    /// True for the one method that is deliberately not uniform.
    pub fn is_negative_control(self) -> bool {
        matches!(self, SamplerMethod::RescaledUniforms)
    }

    /// CLI/CSV token for the method.
    pub fn token(self) -> &'static str {
        match self {
            SamplerMethod::StickBreaking => "stick",
            SamplerMethod::RejectionCube => "rejection",
            SamplerMethod::SortedSpacings => "spacings",
            SamplerMethod::ExponentialNormalize => "exponential",
            SamplerMethod::RescaledUniforms => "rescaled",
        }
    }

    /// Draw one point with this method, counting fractional-power
    /// evaluations into `fractional_powers`.
    pub fn sample_counted<S: UniformSource + ?Sized>(
        self,
        n: usize,
        model: MarginalModel,
        source: &mut S,
        fractional_powers: &mut u64,
    ) -> Result<SimplexPoint> {
        match self {
            SamplerMethod::StickBreaking => {
                sample_stick_breaking_counted(n, model, source, fractional_powers)
            }
            SamplerMethod::RejectionCube => {
                sample_rejection(n, source, default_rejection_budget(n))
            }
            SamplerMethod::SortedSpacings => sample_sorted_spacings(n, source),
            SamplerMethod::ExponentialNormalize => sample_exponential(n, source),
            SamplerMethod::RescaledUniforms => sample_rescaled_uniforms(n, source),
        }
    }

    /// Draw one point with this method and its default settings.
    pub fn sample<S: UniformSource + ?Sized>(
        self,
        n: usize,
        model: MarginalModel,
        source: &mut S,
    ) -> Result<SimplexPoint> {
        let mut scratch = 0;
        self.sample_counted(n, model, source, &mut scratch)
    }
}

impl std::fmt::Display for SamplerMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for SamplerMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "stick" => Ok(SamplerMethod::StickBreaking),
            "rejection" => Ok(SamplerMethod::RejectionCube),
            "spacings" => Ok(SamplerMethod::SortedSpacings),
            "exponential" => Ok(SamplerMethod::ExponentialNormalize),
            "rescaled" => Ok(SamplerMethod::RescaledUniforms),
            other => Err(format!(
                "unknown method `{other}` (expected stick|rejection|spacings|exponential|rescaled)"
            )),
        }
    }
}

/// Trial budget for [`sample_rejection`]: `1000 * (n-1)!`, capped at `10^7`.
///
/// Keeps the oracle usable up to n = 8 or so while failing fast on
/// dimensions where acceptance is hopeless.
pub fn default_rejection_budget(n: usize) -> u64 {
    const CAP: u64 = 10_000_000;
    let mut budget: u64 = 1000;
    for k in 2..n as u64 {
        budget = budget.saturating_mul(k);
        if budget >= CAP {
            return CAP;
        }
    }
    budget.min(CAP)
}

/// Turn the sampled prefix plus its residual into a point.
///
/// The residual is non-negative in exact arithmetic; subtraction drift down
/// to -1e-12 is absorbed by the largest coordinate, anything lower is an
/// internal error.
fn finalize_residual(mut coords: Vec<f64>, residual: f64) -> Vec<f64> {
    if residual >= 0.0 {
        coords.push(residual);
        return coords;
    }
    assert!(
        residual >= -1e-12,
        "residual mass {residual} below -1e-12; sequential subtraction is broken"
    );
    let largest = coords
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("at least one sampled coordinate");
    coords[largest] += residual;
    coords.push(0.0);
    coords
}

/// Sequential inverse-CDF sampler: consumes exactly `n - 1` draws, filling
/// the last coordinate with the remaining mass.
pub fn sample_stick_breaking<S: UniformSource + ?Sized>(
    n: usize,
    model: MarginalModel,
    source: &mut S,
) -> Result<SimplexPoint> {
    let mut scratch = 0;
    sample_stick_breaking_counted(n, model, source, &mut scratch)
}

/// As [`sample_stick_breaking`], also counting fractional-power evaluations
/// (`n - 2` per point in the corrected model: the final step is a rescale).
pub fn sample_stick_breaking_counted<S: UniformSource + ?Sized>(
    n: usize,
    model: MarginalModel,
    source: &mut S,
    fractional_powers: &mut u64,
) -> Result<SimplexPoint> {
    let mut state = StepState::first(n)?;
    let mut coords = Vec::with_capacity(n);
    for _ in 1..n {
        let xi = source.next_uniform();
        let x = inverse_cdf_counted(
            model,
            n,
            state.step(),
            state.remaining(),
            xi,
            fractional_powers,
        )?;
        coords.push(x);
        state.advance(x)?;
    }
    let coords = finalize_residual(coords, state.remaining());
    Ok(SimplexPoint::new(coords).expect("sequential construction yields a valid point"))
}

/// Exact-but-slow oracle: draw `n - 1` cube coordinates until their sum is
/// at most 1, then fill the last coordinate with the complement.
pub fn sample_rejection<S: UniformSource + ?Sized>(
    n: usize,
    source: &mut S,
    max_trials: u64,
) -> Result<SimplexPoint> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut coords = Vec::with_capacity(n);
    for _ in 0..max_trials {
        coords.clear();
        let mut sum = 0.0;
        for _ in 1..n {
            let u = source.next_uniform();
            coords.push(u);
            sum += u;
        }
        if sum <= 1.0 {
            coords.push(1.0 - sum);
            return Ok(SimplexPoint::new(coords).expect("accepted trial yields a valid point"));
        }
    }
    Err(Error::RejectionBudgetExhausted {
        trials: max_trials,
        n,
    })
}

/// Classical oracle: gaps of `n - 1` sorted uniforms, with endpoints 0 and 1.
pub fn sample_sorted_spacings<S: UniformSource + ?Sized>(
    n: usize,
    source: &mut S,
) -> Result<SimplexPoint> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut cuts: Vec<f64> = (1..n).map(|_| source.next_uniform()).collect();
    cuts.sort_unstable_by(f64::total_cmp);
    let mut coords = Vec::with_capacity(n);
    let mut prev = 0.0;
    for &c in &cuts {
        coords.push(c - prev);
        prev = c;
    }
    coords.push(1.0 - prev);
    Ok(SimplexPoint::new(coords).expect("spacings of sorted uniforms are a valid point"))
}

/// Classical oracle: normalized unit-rate exponential variates, one per
/// coordinate (`n` draws).
pub fn sample_exponential<S: UniformSource + ?Sized>(
    n: usize,
    source: &mut S,
) -> Result<SimplexPoint> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut coords = Vec::with_capacity(n);
    let mut sum = 0.0;
    for _ in 0..n {
        // u < 1, so the logarithm is finite.
        let e = -f64::ln_1p(-source.next_uniform());
        coords.push(e);
        sum += e;
    }
    for c in &mut coords {
        *c /= sum;
    }
    Ok(SimplexPoint::new(coords).expect("normalized exponentials are a valid point"))
}

/// Negative control: uniforms divided by their sum. The result lies on the
/// simplex but is not uniform there; the statistical harness exists to
/// reject exactly this kind of generator.
pub fn sample_rescaled_uniforms<S: UniformSource + ?Sized>(
    n: usize,
    source: &mut S,
) -> Result<SimplexPoint> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut coords = Vec::with_capacity(n);
    loop {
        coords.clear();
        let mut sum = 0.0;
        for _ in 0..n {
            let u = source.next_uniform();
            coords.push(u);
            sum += u;
        }
        if sum > 0.0 {
            for c in &mut coords {
                *c /= sum;
            }
            return Ok(SimplexPoint::new(coords).expect("rescaled draws are a valid point"));
        }
        // all-zero draw vector: probability ~2^-53n, redraw
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{ReplaySource, XoshiroSource};
    use approx::assert_abs_diff_eq;

    use MarginalModel::{Corrected, PaperLiteral};

    #[test]
    fn stick_breaking_hand_traces() {
        let mut src = ReplaySource::new(vec![0.3]);
        let p = sample_stick_breaking(2, Corrected, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.7, epsilon = 1e-15);

        // n = 3: x1 = 1 - sqrt(1 - 0.75) = 0.5, then the final rescale
        let mut src = ReplaySource::new(vec![0.75, 0.5]);
        let p = sample_stick_breaking(3, Corrected, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(p[1], 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(p[2], 0.25, epsilon = 1e-14);
        assert_eq!(src.draw_count(), 2);
    }

    #[test]
    fn stick_breaking_draw_and_power_accounting() {
        for n in [2usize, 3, 10, 100] {
            let mut src = XoshiroSource::new(9);
            let mut powers = 0;
            sample_stick_breaking_counted(n, Corrected, &mut src, &mut powers).unwrap();
            assert_eq!(src.draw_count(), n as u64 - 1);
            assert_eq!(powers, n as u64 - 2);
        }
        // constant-exponent model: every step but n = 2 needs the power
        let mut src = XoshiroSource::new(9);
        let mut powers = 0;
        sample_stick_breaking_counted(5, PaperLiteral, &mut src, &mut powers).unwrap();
        assert_eq!(powers, 4);
    }

    #[test]
    fn rejection_hand_trace_and_acceptance() {
        let mut src = ReplaySource::new(vec![0.4]);
        let p = sample_rejection(2, &mut src, 10).unwrap();
        assert_abs_diff_eq!(p[0], 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.6, epsilon = 1e-15);

        // first trial (0.8, 0.5) sums past 1 and is discarded
        let mut src = ReplaySource::new(vec![0.8, 0.5, 0.2, 0.3]);
        let p = sample_rejection(3, &mut src, 10).unwrap();
        assert_abs_diff_eq!(p[0], 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(p[2], 0.5, epsilon = 1e-15);
        assert_eq!(src.draw_count(), 4);
    }

    #[test]
    fn rejection_budget_error_carries_trials() {
        // 0.9 + 0.9 > 1 forever
        let mut src = ReplaySource::new(vec![0.9; 20]);
        let err = sample_rejection(3, &mut src, 7).unwrap_err();
        assert_eq!(err, Error::RejectionBudgetExhausted { trials: 7, n: 3 });
    }

    #[test]
    fn rejection_acceptance_rate_near_one_over_factorial() {
        // n = 4: acceptance probability 1/3! = 1/6
        let mut src = XoshiroSource::new(4242);
        let samples = 20_000u64;
        for _ in 0..samples {
            sample_rejection(4, &mut src, u64::MAX).unwrap();
        }
        let trials = src.draw_count() as f64 / 3.0;
        let rate = samples as f64 / trials;
        assert!(
            (rate - 1.0 / 6.0).abs() < 0.01,
            "acceptance rate {rate} far from 1/6"
        );
    }

    #[test]
    fn default_budget_grows_and_caps() {
        assert_eq!(default_rejection_budget(2), 1000);
        assert_eq!(default_rejection_budget(3), 2000);
        assert_eq!(default_rejection_budget(8), 5_040_000);
        assert_eq!(default_rejection_budget(9), 10_000_000);
        assert_eq!(default_rejection_budget(100), 10_000_000);
    }

    #[test]
    fn spacings_hand_traces() {
        let mut src = ReplaySource::new(vec![0.7, 0.2]);
        let p = sample_sorted_spacings(3, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p[2], 0.3, epsilon = 1e-15);

        let mut src = ReplaySource::new(vec![0.9]);
        let p = sample_sorted_spacings(2, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.9, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.1, epsilon = 1e-15);
        assert_eq!(src.draw_count(), 1);
    }

    #[test]
    fn exponential_hand_trace() {
        // uniforms chosen so the exponentials come out as (1, 2, 1)
        let u = |e: f64| -f64::exp_m1(-e);
        let mut src = ReplaySource::new(vec![u(1.0), u(2.0), u(1.0)]);
        let p = sample_exponential(3, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(p[1], 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(p[2], 0.25, epsilon = 1e-14);
        assert_eq!(src.draw_count(), 3);

        // equal transformed values split evenly
        let mut src = ReplaySource::new(vec![u(1.5), u(1.5)]);
        let p = sample_exponential(2, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-14);
    }

    #[test]
    fn rescaled_hand_traces() {
        let mut src = ReplaySource::new(vec![0.2, 0.6]);
        let p = sample_rescaled_uniforms(2, &mut src).unwrap();
        assert_abs_diff_eq!(p[0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.75, epsilon = 1e-15);

        let mut src = ReplaySource::new(vec![0.4, 0.4, 0.4]);
        let p = sample_rescaled_uniforms(3, &mut src).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(p[i], 1.0 / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn rescaled_redraws_on_all_zero() {
        let mut src = ReplaySource::new(vec![0.0, 0.0, 0.5, 0.5]);
        let p = sample_rescaled_uniforms(2, &mut src).unwrap();
        assert_eq!(src.draw_count(), 4);
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn draw_accounting_per_method() {
        let n = 11usize;
        let cases: [(SamplerMethod, u64); 4] = [
            (SamplerMethod::StickBreaking, n as u64 - 1),
            (SamplerMethod::SortedSpacings, n as u64 - 1),
            (SamplerMethod::ExponentialNormalize, n as u64),
            (SamplerMethod::RescaledUniforms, n as u64),
        ];
        for (method, expected) in cases {
            let mut src = XoshiroSource::new(31);
            method.sample(n, Corrected, &mut src).unwrap();
            assert_eq!(src.draw_count(), expected, "method {method}");
        }
    }

    #[test]
    fn all_methods_are_deterministic_in_the_seed() {
        for method in SamplerMethod::ALL {
            let mut a = XoshiroSource::new(123);
            let mut b = XoshiroSource::new(123);
            let pa = method.sample(4, Corrected, &mut a).unwrap();
            let pb = method.sample(4, Corrected, &mut b).unwrap();
            for i in 0..4 {
                assert_eq!(pa[i].to_bits(), pb[i].to_bits());
            }
        }
    }

    #[test]
    fn dimension_below_two_is_rejected_everywhere() {
        for method in SamplerMethod::ALL {
            let mut src = XoshiroSource::new(1);
            assert_eq!(
                method.sample(1, Corrected, &mut src).unwrap_err(),
                Error::DimensionTooSmall(1)
            );
        }
    }

    #[test]
    fn residual_clamp_absorbs_tiny_negative_drift() {
        // sampled prefix overshot 1 by 5e-13, leaving a negative residual
        let coords = finalize_residual(vec![0.6 + 5e-13, 0.4], -5e-13);
        assert_eq!(coords.len(), 3);
        assert_eq!(coords[2], 0.0);
        assert_abs_diff_eq!(coords[0], 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(coords.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
    }

    #[test]
    #[should_panic(expected = "below -1e-12")]
    fn residual_clamp_rejects_large_drift() {
        finalize_residual(vec![0.6, 0.5], -0.1);
    }

    #[test]
    fn negative_control_flag() {
        assert!(SamplerMethod::RescaledUniforms.is_negative_control());
        assert!(!SamplerMethod::StickBreaking.is_negative_control());
    }

    #[test]
    fn method_tokens_round_trip() {
        for method in SamplerMethod::ALL {
            assert_eq!(method.token().parse::<SamplerMethod>().unwrap(), method);
        }
        assert!("bogus".parse::<SamplerMethod>().is_err());
    }
}
