//! Length-p sequences of values in [0,1]. Indicator inputs (exact 0/1
//! values) are tracked so counting operations can stay in integers.

use crate::{Error, PrimeField, Result};

/// Absolute slack allowed outside [0,1] for non-indicator values.
const RANGE_TOL: f64 = 1e-12;

/// A function from `0..p` into [0,1]. The `indicator` flag records that
/// every value is exactly 0 or 1, which switches convolution and support
/// counting onto exact integer paths.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityFunction {
    field: PrimeField,
    values: Vec<f64>,
    indicator: bool,
}

impl DensityFunction {
    /// Validates that `values` has length p and every entry lies in [0,1]
    /// (within `1e-12`; entries inside the slack are clamped). Values that
    /// are all exactly 0.0 or 1.0 put the function in indicator mode.
    pub fn from_values(field: PrimeField, values: Vec<f64>) -> Result<Self> {
        if values.len() != field.len() {
            return Err(Error::LengthMismatch { want: field.len(), got: values.len() });
        }
        let indicator = values.iter().all(|&v| v == 0.0 || v == 1.0);
        let mut clamped = values;
        for (index, v) in clamped.iter_mut().enumerate() {
            if !v.is_finite() || *v < -RANGE_TOL || *v > 1.0 + RANGE_TOL {
                return Err(Error::ValueOutOfRange { index, value: *v });
            }
            *v = v.clamp(0.0, 1.0);
        }
        Ok(Self { field, values: clamped, indicator })
    }

    /// Indicator of a residue set (validated: distinct, in range).
    pub fn indicator(field: PrimeField, set: &[u64]) -> Result<Self> {
        let set = field.check_set(set)?;
        let mut values = vec![0.0; field.len()];
        for &s in &set {
            values[s as usize] = 1.0;
        }
        Ok(Self { field, values, indicator: true })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Mean density theta = p^{-1} sum_n f(n).
    pub fn theta(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.field.p() as f64
    }

    #[inline]
    pub fn is_indicator(&self) -> bool {
        self.indicator
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Support of an indicator function as a sorted residue set.
    /// Meaningful only in indicator mode.
    pub fn support(&self) -> Vec<u64> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1.0)
            .map(|(n, _)| n as u64)
            .collect()
    }
}
