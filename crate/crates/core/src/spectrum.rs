//! Magnitude-ordered Fourier coefficients and spectral-gap certificates.

use crate::{Error, PrimeField, Result};
use num_complex::Complex64;
use serde::Serialize;

/// The p Fourier coefficients of a function together with a permutation
/// a_1, ..., a_p of the frequencies ordered by nonincreasing magnitude.
/// Ties are broken by ascending frequency index, so the ordering is
/// deterministic; for a nonnegative source function this places a_1 = 0.
#[derive(Debug, Clone)]
pub struct Spectrum {
    field: PrimeField,
    coeffs: Vec<Complex64>,
    order: Vec<u64>,
    magnitudes: Vec<f64>,
}

impl Spectrum {
    pub fn new(field: PrimeField, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != field.len() {
            return Err(Error::LengthMismatch { want: field.len(), got: coeffs.len() });
        }
        let (order, magnitudes) = order_coefficients(&coeffs);
        Ok(Self { field, coeffs, order, magnitudes })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff_at(&self, a: u64) -> Complex64 {
        self.coeffs[a as usize]
    }

    /// Frequency permutation a_1, ..., a_p (nonincreasing magnitude).
    #[inline]
    pub fn order(&self) -> &[u64] {
        &self.order
    }

    /// Ordered magnitudes lambda_1 >= lambda_2 >= ... >= lambda_p.
    #[inline]
    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }

    /// lambda_k, 1-based.
    pub fn lambda(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.magnitudes.len() {
            return Err(Error::RankOutOfRange { k, max: self.magnitudes.len() });
        }
        Ok(self.magnitudes[k - 1])
    }

    /// a_k, 1-based.
    pub fn frequency(&self, k: usize) -> Result<u64> {
        if k == 0 || k > self.order.len() {
            return Err(Error::RankOutOfRange { k, max: self.order.len() });
        }
        Ok(self.order[k - 1])
    }

    /// The top-k frequency set {a_1, ..., a_k}, sorted ascending.
    pub fn top_frequencies(&self, k: usize) -> Result<Vec<u64>> {
        if k == 0 || k > self.order.len() {
            return Err(Error::RankOutOfRange { k, max: self.order.len() });
        }
        let mut out = self.order[..k].to_vec();
        out.sort_unstable();
        Ok(out)
    }

    /// Gap certificate at rank k: gamma = lambda_{k+1} / lambda_k.
    /// Requires 1 <= k <= p-1 and lambda_k > 0.
    pub fn gap(&self, k: usize) -> Result<GapCertificate> {
        let p = self.field.len();
        if k == 0 || k > p - 1 {
            return Err(Error::RankOutOfRange { k, max: p - 1 });
        }
        let lambda_k = self.magnitudes[k - 1];
        if lambda_k <= 0.0 {
            return Err(Error::ZeroLambda { k });
        }
        let lambda_k1 = self.magnitudes[k];
        Ok(GapCertificate { k, gamma: lambda_k1 / lambda_k, lambda_k, lambda_k1 })
    }
}

/// Witness that lambda_{k+1} <= gamma * lambda_k with the minimal valid
/// gamma (the exact ratio).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GapCertificate {
    pub k: usize,
    pub gamma: f64,
    pub lambda_k: f64,
    pub lambda_k1: f64,
}

/// Orders frequencies by nonincreasing coefficient magnitude, ties broken
/// by ascending frequency. Returns the permutation and its magnitudes.
pub fn order_coefficients(coeffs: &[Complex64]) -> (Vec<u64>, Vec<f64>) {
    let mags: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let mut idx: Vec<u64> = (0..coeffs.len() as u64).collect();
    idx.sort_unstable_by(|&a, &b| {
        mags[b as usize].total_cmp(&mags[a as usize]).then(a.cmp(&b))
    });
    let ordered_mags = idx.iter().map(|&a| mags[a as usize]).collect();
    (idx, ordered_mags)
}
