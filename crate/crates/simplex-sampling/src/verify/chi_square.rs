//! Chi-square uniformity test on bins made equiprobable under a target CDF.

use super::{Alpha, EmpiricalSample, TestReport, VerifyError};

const MIN_BINS: usize = 10;
const MIN_EXPECTED: f64 = 20.0;

/// Standard normal quantile, Acklam's rational approximation
/// (absolute error below 1.2e-9 across the open unit interval).
fn normal_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.38357751867269e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

/// Upper-tail chi-square quantile via the Wilson-Hilferty cube approximation.
pub(crate) fn chi_square_critical(degrees: f64, alpha: Alpha) -> f64 {
    let z = normal_quantile(1.0 - alpha.level());
    let t = 2.0 / (9.0 * degrees);
    degrees * (1.0 - t + z * t.sqrt()).powi(3)
}

/// Chi-square test of `sample` against `cdf` on `bins` equiprobable bins.
///
/// Binning happens in probability space: observation `v` lands in bin
/// `floor(B * cdf(v))`, which is the equiprobable partition without solving
/// for bin edges. Degrees of freedom are `B - 1` (no fitted parameters).
pub fn chi_square_marginal<F>(
    sample: &EmpiricalSample,
    cdf: F,
    bins: usize,
    alpha: Alpha,
) -> Result<TestReport, VerifyError>
where
    F: Fn(f64) -> f64,
{
    if bins < MIN_BINS {
        return Err(VerifyError::TooFewBins {
            bins,
            min: MIN_BINS,
        });
    }
    let n = sample.len();
    let expected = n as f64 / bins as f64;
    if expected < MIN_EXPECTED {
        return Err(VerifyError::ExpectedCountTooSmall {
            expected,
            min: MIN_EXPECTED,
        });
    }
    let mut counts = vec![0u64; bins];
    for &v in sample.values() {
        let f = cdf(v);
        if !(0.0..=1.0).contains(&f) {
            return Err(VerifyError::CdfOutOfRange { value: f });
        }
        let bin = ((f * bins as f64) as usize).min(bins - 1);
        counts[bin] += 1;
    }
    let statistic = counts
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum();
    let critical = chi_square_critical(bins as f64 - 1.0, alpha);
    Ok(TestReport::new(
        "chi-square",
        statistic,
        critical,
        alpha,
        (n, None),
    ))
}
