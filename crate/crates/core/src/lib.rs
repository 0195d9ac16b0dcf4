//! Fourier analysis of [0,1]-valued functions on the prime field Z/pZ:
//! spectra with a deterministic magnitude ordering, spectral-gap
//! certificates, sumset-coverage lower bounds, and the constructive
//! unique-differences machinery (dilation search, representation
//! counting, difference chains) that backs them.
//!
//! Every nontrivial claim an operation makes is certified against an
//! independent brute-force oracle, either inline (representation counts,
//! chain bases) or in the test suite (transform and convolution kernels).

pub mod corpus;
pub mod coverage;
pub mod density;
pub mod differences;
pub mod diophantine;
mod error;
pub mod field;
pub mod repeated;
pub mod spectrum;
pub mod transform;

pub use density::DensityFunction;
pub use error::{Error, Result};
pub use field::PrimeField;
pub use spectrum::{GapCertificate, Spectrum};

/// Positivity threshold for floating-point convolution values: a value
/// counts as positive when it exceeds `EPS_POS_FACTOR * p`. Indicator
/// inputs use exact integer counting instead.
pub const EPS_POS_FACTOR: f64 = 1e-9;

/// Default absolute tolerance for validation and inversion residues.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a stream-independent child seed from a parent seed and a salt.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    splitmix64(seed ^ splitmix64(salt))
}
