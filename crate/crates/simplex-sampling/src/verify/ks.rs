//! Kolmogorov-Smirnov tests with asymptotic critical values.

use super::{Alpha, EmpiricalSample, TestReport, VerifyError};

/// Minimum sample size for the asymptotic critical values to be honest.
pub(crate) const MIN_KS_SAMPLE: usize = 50;

/// Tail probability of the Kolmogorov distribution,
/// `Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2)`.
fn kolmogorov_tail(lambda: f64) -> f64 {
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100u32 {
        let term = (-2.0 * f64::from(k * k) * lambda * lambda).exp();
        sum += sign * term;
        if term < 1e-18 {
            break;
        }
        sign = -sign;
    }
    2.0 * sum
}

/// Critical coefficient `c` with `Q(c) = alpha`, by bisection; the KS
/// statistic is compared against `c / sqrt(N)` (one-sample) or
/// `c * sqrt((Na + Nb) / (Na * Nb))` (two-sample).
pub fn kolmogorov_critical(alpha: Alpha) -> f64 {
    let target = alpha.level();
    let (mut lo, mut hi) = (0.2f64, 3.0f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if kolmogorov_tail(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// One-sample KS test of `sample` against the (monotone, `[0,1]`-valued)
/// cumulative distribution `cdf`.
pub fn ks_one_sample<F>(
    sample: &EmpiricalSample,
    cdf: F,
    alpha: Alpha,
) -> Result<TestReport, VerifyError>
where
    F: Fn(f64) -> f64,
{
    let n = sample.len();
    if n < MIN_KS_SAMPLE {
        return Err(VerifyError::SampleTooSmall {
            len: n,
            min: MIN_KS_SAMPLE,
        });
    }
    let n_f = n as f64;
    let mut statistic = 0.0f64;
    for (i, &v) in sample.values().iter().enumerate() {
        let f = cdf(v);
        if !(0.0..=1.0).contains(&f) {
            return Err(VerifyError::CdfOutOfRange { value: f });
        }
        let upper = ((i + 1) as f64 / n_f - f).abs();
        let lower = (i as f64 / n_f - f).abs();
        statistic = statistic.max(upper).max(lower);
    }
    let critical = kolmogorov_critical(alpha) / n_f.sqrt();
    Ok(TestReport::new(
        "ks-one-sample",
        statistic,
        critical,
        alpha,
        (n, None),
    ))
}

/// Largest gap between the empirical CDFs of two sorted slices.
fn two_sample_statistic(xs: &[f64], ys: &[f64]) -> f64 {
    let (na, nb) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut statistic = 0.0f64;
    while i < na && j < nb {
        let next = xs[i].min(ys[j]);
        while i < na && xs[i] <= next {
            i += 1;
        }
        while j < nb && ys[j] <= next {
            j += 1;
        }
        let gap = (i as f64 / na as f64 - j as f64 / nb as f64).abs();
        statistic = statistic.max(gap);
    }
    statistic
}

/// Two-sample KS test: largest gap between the two empirical CDFs.
pub fn ks_two_sample(
    a: &EmpiricalSample,
    b: &EmpiricalSample,
    alpha: Alpha,
) -> Result<TestReport, VerifyError> {
    let (na, nb) = (a.len(), b.len());
    for len in [na, nb] {
        if len < MIN_KS_SAMPLE {
            return Err(VerifyError::SampleTooSmall {
                len,
                min: MIN_KS_SAMPLE,
            });
        }
    }
    let statistic = two_sample_statistic(a.values(), b.values());
    let critical =
        kolmogorov_critical(alpha) * ((na + nb) as f64 / (na as f64 * nb as f64)).sqrt();
    Ok(TestReport::new(
        "ks-two-sample",
        statistic,
        critical,
        alpha,
        (na, Some(nb)),
    ))
}
