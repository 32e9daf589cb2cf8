use crate::error::{Error, Result};

/// Absolute tolerance on the coordinate sum of a valid [`SimplexPoint`].
pub const SUM_TOLERANCE: f64 = 1e-12;

/// A point on the unit simplex: `n >= 2` coordinates, each in `[0, 1]`,
/// summing to 1 within [`SUM_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    /// Validate `coords` and wrap them as a simplex point.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        let mut sum = 0.0;
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::CoordinateNotFinite { index });
            }
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::CoordinateOutOfRange { index, value });
            }
            sum += value;
        }
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::SumNotOne {
                sum,
                tolerance: SUM_TOLERANCE,
            });
        }
        Ok(Self { coords })
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }
}

impl AsRef<[f64]> for SimplexPoint {
    fn as_ref(&self) -> &[f64] {
        &self.coords
    }
}

impl std::ops::Index<usize> for SimplexPoint {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.coords[index]
    }
}
