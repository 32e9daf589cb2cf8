//! Sample moments of a batch against the analytic targets of the uniform
//! law on the simplex: mean `1/n`, variance `(n-1)/(n^2 (n+1))` and
//! off-diagonal covariance `-1/(n^2 (n+1))`.

use super::VerifyError;
use crate::point::SimplexPoint;

const MIN_BATCH: usize = 10_000;
const SE_MULTIPLE: f64 = 5.0;

/// One moment comparison: sample value vs analytic target, judged at five
/// standard errors.
#[derive(Debug, Clone)]
pub struct MomentCheck {
    pub sample: f64,
    pub target: f64,
    pub std_error: f64,
    pub pass: bool,
}

impl MomentCheck {
    fn new(sample: f64, target: f64, std_error: f64) -> Self {
        let pass = (sample - target).abs() < SE_MULTIPLE * std_error;
        Self {
            sample,
            target,
            std_error,
            pass,
        }
    }

    /// Distance from the target in standard errors.
    pub fn z_score(&self) -> f64 {
        (self.sample - self.target).abs() / self.std_error
    }
}

/// Moment report for a batch: per-coordinate means and variances plus the
/// covariance of the first two coordinates.
#[derive(Debug, Clone)]
pub struct MomentReport {
    pub dimension: usize,
    pub sample_size: usize,
    pub means: Vec<MomentCheck>,
    pub variances: Vec<MomentCheck>,
    pub covariance: MomentCheck,
}

impl MomentReport {
    pub fn all_pass(&self) -> bool {
        self.means.iter().all(|c| c.pass)
            && self.variances.iter().all(|c| c.pass)
            && self.covariance.pass
    }

    /// Largest deviation, in standard errors, across all checks.
    pub fn worst_z(&self) -> f64 {
        self.means
            .iter()
            .chain(&self.variances)
            .chain(std::iter::once(&self.covariance))
            .map(MomentCheck::z_score)
            .fold(0.0, f64::max)
    }
}

impl std::fmt::Display for MomentReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:<14} worst|z|={:<9.3} checks={:<12} N={:<12} {}",
            "moments",
            self.worst_z(),
            2 * self.dimension + 1,
            self.sample_size,
            if self.all_pass() { "PASS" } else { "FAIL" }
        )
    }
}

/// Compare the sample moments of `points` with the uniform-law targets.
///
/// Standard errors are estimated from the sample itself: `sqrt(m2/N)` for
/// means, `sqrt((m4 - m2^2)/N)` for variances and the analogous mixed-moment
/// form for the covariance.
pub fn moment_check(points: &[SimplexPoint]) -> Result<MomentReport, VerifyError> {
    let size = points.len();
    if size < MIN_BATCH {
        return Err(VerifyError::BatchTooSmall {
            len: size,
            min: MIN_BATCH,
        });
    }
    let n = points[0].dim();
    for p in points {
        if p.dim() != n {
            return Err(VerifyError::MixedDimensions {
                first: n,
                other: p.dim(),
            });
        }
    }
    let size_f = size as f64;

    let mut means = vec![0.0f64; n];
    for p in points {
        for (m, &x) in means.iter_mut().zip(p.coords()) {
            *m += x;
        }
    }
    for m in &mut means {
        *m /= size_f;
    }

    // central moments: m2 and m4 per coordinate, plus the (1,1) mixed
    // moments of the first coordinate pair
    let mut m2 = vec![0.0f64; n];
    let mut m4 = vec![0.0f64; n];
    let mut m11 = 0.0f64;
    let mut m22 = 0.0f64;
    for p in points {
        for i in 0..n {
            let d = p[i] - means[i];
            let d2 = d * d;
            m2[i] += d2;
            m4[i] += d2 * d2;
        }
        let d0 = p[0] - means[0];
        let d1 = p[1] - means[1];
        m11 += d0 * d1;
        m22 += d0 * d0 * d1 * d1;
    }
    for v in m2.iter_mut().chain(m4.iter_mut()) {
        *v /= size_f;
    }
    m11 /= size_f;
    m22 /= size_f;

    let n_f = n as f64;
    let mean_target = 1.0 / n_f;
    let var_target = (n_f - 1.0) / (n_f * n_f * (n_f + 1.0));
    let cov_target = -1.0 / (n_f * n_f * (n_f + 1.0));

    let mean_checks = (0..n)
        .map(|i| MomentCheck::new(means[i], mean_target, (m2[i] / size_f).sqrt()))
        .collect();
    let var_checks = (0..n)
        .map(|i| {
            let se = ((m4[i] - m2[i] * m2[i]).max(0.0) / size_f).sqrt();
            MomentCheck::new(m2[i], var_target, se)
        })
        .collect();
    let cov_se = ((m22 - m11 * m11).max(0.0) / size_f).sqrt();
    let covariance = MomentCheck::new(m11, cov_target, cov_se);

    Ok(MomentReport {
        dimension: n,
        sample_size: size,
        means: mean_checks,
        variances: var_checks,
        covariance,
    })
}
