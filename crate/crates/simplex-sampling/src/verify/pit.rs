//! Probability integral transform: push a batch of points through the
//! per-step marginal CDFs. Uniform input points under the corrected model
//! come out as i.i.d. uniforms on `[0, 1]`.

use super::VerifyError;
use crate::marginal::{marginal_cdf, walk_point, MarginalModel};
use crate::point::SimplexPoint;

/// Apply the stepwise marginal CDF to each point, emitting `n - 1` values
/// per point in step order.
///
/// Feeding back the points generated from a recorded stream recovers that
/// stream (to full precision) when the same model is used.
pub fn pit_transform(
    points: &[SimplexPoint],
    model: MarginalModel,
) -> Result<Vec<f64>, VerifyError> {
    let mut out = Vec::new();
    let mut dim = None;
    for point in points {
        match dim {
            None => dim = Some(point.dim()),
            Some(first) if first != point.dim() => {
                return Err(VerifyError::MixedDimensions {
                    first,
                    other: point.dim(),
                })
            }
            _ => {}
        }
        out.reserve(point.dim() - 1);
        walk_point(point, |state, x| {
            out.push(marginal_cdf(
                model,
                state.dimension(),
                state.step(),
                state.remaining(),
                x,
            )?);
            Ok(())
        })?;
    }
    Ok(out)
}
