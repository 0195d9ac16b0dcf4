//! Fourier transform, inversion, modulation, and convolution kernels.
//!
//! Conventions, fixed once for the whole crate:
//!   forward   f^(a) = sum_n f(n) e^{+2 pi i a n / p}
//!   inverse   f(n)  = p^{-1} sum_a f^(a) e^{-2 pi i a n / p}
//!   (f*g)(n)  = sum_m f(m) g(n - m mod p),  so (f*g)^ = f^ g^.
//!
//! The baseline kernel is the direct O(p^2) evaluation over a precomputed
//! root table. The table is built with explicit conjugate symmetry
//! (w[p-j] = conj(w[j]) bit-exactly), which makes the magnitudes of
//! conjugate coefficient pairs identical and keeps the spectrum ordering
//! tie-break deterministic.

use crate::density::DensityFunction;
use crate::spectrum::Spectrum;
use crate::{Error, PrimeField, Result};
use num_complex::Complex64;

/// Unit roots w[j] = e^{2 pi i j / p} with enforced conjugate symmetry.
pub(crate) struct Roots {
    p: usize,
    w: Vec<Complex64>,
}

impl Roots {
    pub(crate) fn new(field: PrimeField) -> Self {
        let p = field.len();
        let mut w = vec![Complex64::new(1.0, 0.0); p];
        for j in 1..=(p - 1) / 2 {
            let theta = std::f64::consts::TAU * j as f64 / p as f64;
            let root = Complex64::new(theta.cos(), theta.sin());
            w[j] = root;
            w[p - j] = root.conj();
        }
        Self { p, w }
    }

    #[inline]
    pub(crate) fn at(&self, idx: usize) -> Complex64 {
        self.w[idx]
    }

    /// Forward transform of a real sequence.
    pub(crate) fn forward_real(&self, x: &[f64]) -> Vec<Complex64> {
        let p = self.p;
        let mut out = vec![Complex64::new(0.0, 0.0); p];
        for (a, slot) in out.iter_mut().enumerate() {
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for &v in x.iter().take(p) {
                acc += self.w[idx].scale(v);
                idx += a;
                if idx >= p {
                    idx -= p;
                }
            }
            *slot = acc;
        }
        out
    }

    /// Forward transform of a complex sequence.
    pub(crate) fn forward(&self, x: &[Complex64]) -> Vec<Complex64> {
        let p = self.p;
        let mut out = vec![Complex64::new(0.0, 0.0); p];
        for (a, slot) in out.iter_mut().enumerate() {
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for &v in x.iter().take(p) {
                acc += v * self.w[idx];
                idx += a;
                if idx >= p {
                    idx -= p;
                }
            }
            *slot = acc;
        }
        out
    }

    /// Inverse transform including the p^{-1} factor.
    pub(crate) fn inverse(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        let p = self.p;
        let scale = 1.0 / p as f64;
        let mut out = vec![Complex64::new(0.0, 0.0); p];
        for (n, slot) in out.iter_mut().enumerate() {
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for &c in coeffs.iter().take(p) {
                acc += c * self.w[idx].conj();
                idx += n;
                if idx >= p {
                    idx -= p;
                }
            }
            *slot = acc.scale(scale);
        }
        out
    }
}

/// Fourier transform of a density function, with the magnitude ordering
/// populated.
pub fn dft(f: &DensityFunction) -> Spectrum {
    let roots = Roots::new(f.field());
    let coeffs = roots.forward_real(f.values());
    Spectrum::new(f.field(), coeffs).expect("lengths match by construction")
}

/// Result of inverting a spectrum back to a real sequence. `max_imag`
/// reports the largest discarded imaginary residue; anything at or above
/// the tolerance is rejected as a malformed spectrum instead.
#[derive(Debug, Clone)]
pub struct Inversion {
    pub values: Vec<f64>,
    pub max_imag: f64,
}

/// Inverse transform with an imaginary-residue check at absolute
/// tolerance `tol` (crate default 1e-9).
pub fn idft(s: &Spectrum, tol: f64) -> Result<Inversion> {
    let roots = Roots::new(s.field());
    let complex = roots.inverse(s.coeffs());
    let max_imag = complex.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    if max_imag >= tol {
        return Err(Error::NonNegligibleImaginary { max_imag, tol });
    }
    Ok(Inversion { values: complex.iter().map(|c| c.re).collect(), max_imag })
}

/// g(n) = e^{2 pi i d n / p} f(n). The transform of g is the d-shift of
/// the transform of f, and |g| = f pointwise.
pub fn modulate(f: &DensityFunction, d: u64) -> Result<Vec<Complex64>> {
    let field = f.field();
    field.check_residue(d)?;
    let roots = Roots::new(field);
    let p = field.len();
    let mut idx = 0usize;
    let mut out = Vec::with_capacity(p);
    for &v in f.values() {
        out.push(roots.at(idx).scale(v));
        idx += d as usize;
        if idx >= p {
            idx -= p;
        }
    }
    Ok(out)
}

/// Convolution output: exact representation counts for indicator inputs,
/// floating values otherwise.
#[derive(Debug, Clone)]
pub enum Convolution {
    Counts(Vec<u64>),
    Values(Vec<f64>),
}

impl Convolution {
    pub fn as_floats(&self) -> Vec<f64> {
        match self {
            Convolution::Counts(c) => c.iter().map(|&x| x as f64).collect(),
            Convolution::Values(v) => v.clone(),
        }
    }

    /// Number of residues with a positive value. Exact comparison for
    /// counts; `eps` threshold for floating values.
    pub fn support_count(&self, eps: f64) -> usize {
        match self {
            Convolution::Counts(c) => c.iter().filter(|&&x| x > 0).count(),
            Convolution::Values(v) => v.iter().filter(|&&x| x > eps).count(),
        }
    }
}

/// (f*g)(n) over matching fields. Indicator pairs take the exact integer
/// counting path; everything else goes through the transform kernel.
pub fn convolve(f: &DensityFunction, g: &DensityFunction) -> Result<Convolution> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(f.field().p(), g.field().p()));
    }
    if f.is_indicator() && g.is_indicator() {
        let counts = convolve_exact(f.field(), &f.support(), &g.support());
        Ok(Convolution::Counts(counts))
    } else {
        Ok(Convolution::Values(convolve_seq(f.field(), f.values(), g.values())?))
    }
}

/// f*f with the same exact/floating dispatch as [`convolve`].
pub fn self_convolution(f: &DensityFunction) -> Convolution {
    convolve(f, f).expect("fields match trivially")
}

/// Transform-based real convolution.
pub fn convolve_seq(field: PrimeField, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    check_len(field, x.len())?;
    check_len(field, y.len())?;
    let roots = Roots::new(field);
    let fx = roots.forward_real(x);
    let fy = roots.forward_real(y);
    let prod: Vec<Complex64> = fx.iter().zip(&fy).map(|(a, b)| a * b).collect();
    Ok(roots.inverse(&prod).iter().map(|c| c.re).collect())
}

/// Transform-based complex convolution.
pub fn convolve_seq_complex(
    field: PrimeField,
    x: &[Complex64],
    y: &[Complex64],
) -> Result<Vec<Complex64>> {
    check_len(field, x.len())?;
    check_len(field, y.len())?;
    let roots = Roots::new(field);
    let fx = roots.forward(x);
    let fy = roots.forward(y);
    let prod: Vec<Complex64> = fx.iter().zip(&fy).map(|(a, b)| a * b).collect();
    Ok(roots.inverse(&prod))
}

/// Direct O(p^2) convolution, the oracle for the transform path.
pub fn convolve_direct(field: PrimeField, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    check_len(field, x.len())?;
    check_len(field, y.len())?;
    let p = field.len();
    let mut out = vec![0.0; p];
    for (n, slot) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (m, &xv) in x.iter().enumerate() {
            let j = if n >= m { n - m } else { n + p - m };
            acc += xv * y[j];
        }
        *slot = acc;
    }
    Ok(out)
}

/// Direct O(p^2) complex convolution oracle.
pub fn convolve_direct_complex(
    field: PrimeField,
    x: &[Complex64],
    y: &[Complex64],
) -> Result<Vec<Complex64>> {
    check_len(field, x.len())?;
    check_len(field, y.len())?;
    let p = field.len();
    let mut out = vec![Complex64::new(0.0, 0.0); p];
    for (n, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, &xv) in x.iter().enumerate() {
            let j = if n >= m { n - m } else { n + p - m };
            acc += xv * y[j];
        }
        *slot = acc;
    }
    Ok(out)
}

/// Exact representation counts for indicator sets:
/// out[n] = |{(a, b) in s1 x s2 : a + b = n mod p}|.
pub fn convolve_exact(field: PrimeField, s1: &[u64], s2: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; field.len()];
    for &a in s1 {
        for &b in s2 {
            out[field.add(a, b) as usize] += 1;
        }
    }
    out
}

fn check_len(field: PrimeField, len: usize) -> Result<()> {
    if len != field.len() {
        return Err(Error::LengthMismatch { want: field.len(), got: len });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn random_density(p: u64, seed: u64) -> DensityFunction {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<f64> = (0..p).map(|_| rng.gen_range(0.0..=1.0)).collect();
        DensityFunction::from_values(field(p), values).unwrap()
    }

    #[test]
    fn constant_function_transform() {
        let f = DensityFunction::from_values(field(5), vec![1.0; 5]).unwrap();
        let s = dft(&f);
        assert!((s.coeff_at(0).re - 5.0).abs() < 1e-12);
        assert!(s.coeff_at(0).im.abs() < 1e-12);
        for a in 1..5 {
            assert!(s.coeff_at(a).norm() < 1e-12);
        }
    }

    #[test]
    fn delta_function_transform_is_flat() {
        let f = DensityFunction::indicator(field(7), &[0]).unwrap();
        let s = dft(&f);
        for a in 0..7 {
            assert!((s.coeff_at(a) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn cosine_bump_coefficients() {
        let p = 11u64;
        let values: Vec<f64> = (0..p)
            .map(|n| 0.5 + 0.5 * (std::f64::consts::TAU * n as f64 / p as f64).cos())
            .collect();
        let f = DensityFunction::from_values(field(p), values).unwrap();
        let s = dft(&f);
        assert!((s.coeff_at(0).re - 5.5).abs() < 1e-9);
        assert!((s.coeff_at(1).norm() - 2.75).abs() < 1e-9);
        assert!((s.coeff_at(10).norm() - 2.75).abs() < 1e-9);
        for a in 2..10 {
            assert!(s.coeff_at(a).norm() < 1e-9, "coefficient {a} should vanish");
        }
    }

    #[test]
    fn inversion_roundtrip() {
        let f = random_density(31, 0xBEEF);
        let inv = idft(&dft(&f), 1e-9).unwrap();
        for (a, b) in f.values().iter().zip(&inv.values) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!(inv.max_imag < 1e-9);
    }

    #[test]
    fn prescribed_spectrum_inverts_to_cosine_bump() {
        let p = 11u64;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 11];
        coeffs[0] = Complex64::new(5.5, 0.0);
        coeffs[1] = Complex64::new(2.75, 0.0);
        coeffs[10] = Complex64::new(2.75, 0.0);
        let s = Spectrum::new(field(p), coeffs).unwrap();
        let inv = idft(&s, 1e-9).unwrap();
        for n in 0..p {
            let expect = 0.5 + 0.5 * (std::f64::consts::TAU * n as f64 / p as f64).cos();
            assert!((inv.values[n as usize] - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn zero_spectrum_inverts_to_zero() {
        let s = Spectrum::new(field(7), vec![Complex64::new(0.0, 0.0); 7]).unwrap();
        let inv = idft(&s, 1e-9).unwrap();
        assert!(inv.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn asymmetric_spectrum_is_rejected() {
        // A lone coefficient at frequency 1 inverts to a genuinely complex
        // sequence, which must be refused.
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 7];
        coeffs[1] = Complex64::new(1.0, 0.0);
        let s = Spectrum::new(field(7), coeffs).unwrap();
        assert!(matches!(idft(&s, 1e-9), Err(Error::NonNegligibleImaginary { .. })));
    }

    #[test]
    fn indicator_convolution_counts_pairs() {
        let f = DensityFunction::indicator(field(5), &[0, 1]).unwrap();
        match self_convolution(&f) {
            Convolution::Counts(c) => assert_eq!(c, vec![1, 2, 1, 0, 0]),
            Convolution::Values(_) => panic!("indicator pair must take the exact path"),
        }
    }

    #[test]
    fn constant_convolution_is_constant_p() {
        let p = 13u64;
        let f = DensityFunction::from_values(field(p), vec![1.0; p as usize]).unwrap();
        let c = self_convolution(&f).as_floats();
        for v in c {
            assert!((v - p as f64).abs() < 1e-9 * p as f64);
        }
    }

    #[test]
    fn transform_convolution_matches_direct_oracle() {
        let p = 257u64;
        let f = random_density(p, 1);
        let g = random_density(p, 2);
        let via_transform = convolve_seq(field(p), f.values(), g.values()).unwrap();
        let direct = convolve_direct(field(p), f.values(), g.values()).unwrap();
        let scale = direct.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (a, b) in via_transform.iter().zip(&direct) {
            assert!((a - b).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn convolve_rejects_field_mismatch() {
        let f = DensityFunction::indicator(field(5), &[0]).unwrap();
        let g = DensityFunction::indicator(field(7), &[0]).unwrap();
        assert!(matches!(convolve(&f, &g), Err(Error::FieldMismatch(5, 7))));
    }

    #[test]
    fn indicator_support_of_self_convolution_is_sumset() {
        let set = [1u64, 2, 5, 9];
        let f = DensityFunction::indicator(field(11), &set).unwrap();
        let conv = self_convolution(&f);
        // Set-enumeration oracle for the sumset.
        let fld = field(11);
        let mut sumset = std::collections::BTreeSet::new();
        for &a in &set {
            for &b in &set {
                sumset.insert(fld.add(a, b));
            }
        }
        match conv {
            Convolution::Counts(c) => {
                for (n, &count) in c.iter().enumerate() {
                    assert_eq!(count > 0, sumset.contains(&(n as u64)));
                }
            }
            Convolution::Values(_) => panic!("expected exact path"),
        }
    }

    #[test]
    fn modulation_identity_and_shift_law() {
        let f = DensityFunction::indicator(field(5), &[1]).unwrap();
        let g0 = modulate(&f, 0).unwrap();
        for (a, b) in g0.iter().zip(f.values()) {
            assert!((a.re - b).abs() < 1e-15 && a.im.abs() < 1e-15);
        }

        let g = modulate(&f, 1).unwrap();
        let theta = std::f64::consts::TAU / 5.0;
        assert!((g[1] - Complex64::new(theta.cos(), theta.sin())).norm() < 1e-12);
        // Shift law checked entrywise: transform of g at a equals the
        // transform of f at a+1.
        let roots = Roots::new(field(5));
        let gh = roots.forward(&g);
        let s = dft(&f);
        for a in 0..5u64 {
            let shifted = s.coeff_at((a + 1) % 5);
            assert!((gh[a as usize] - shifted).norm() < 1e-9);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn parseval_identity(seed in any::<u64>()) {
            let f = random_density(31, seed);
            let s = dft(&f);
            let lhs: f64 = f.values().iter().map(|v| v * v).sum();
            let rhs: f64 = s.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>() / 31.0;
            prop_assert!((lhs - rhs).abs() < 1e-9 * lhs.max(1.0));
        }

        #[test]
        fn roundtrip_identity(seed in any::<u64>()) {
            let f = random_density(17, seed);
            let inv = idft(&dft(&f), 1e-9).unwrap();
            for (a, b) in f.values().iter().zip(&inv.values) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }

        #[test]
        fn frequency_shift_law(seed in any::<u64>(), d in 0u64..13) {
            let f = random_density(13, seed);
            let g = modulate(&f, d).unwrap();
            let roots = Roots::new(field(13));
            let gh = roots.forward(&g);
            let s = dft(&f);
            for a in 0..13u64 {
                let shifted = s.coeff_at((a + d) % 13);
                prop_assert!((gh[a as usize] - shifted).norm() < 1e-9);
            }
            // Modulus preservation: |g(n)| = f(n) exactly up to rounding.
            for (gv, fv) in g.iter().zip(f.values()) {
                prop_assert!((gv.norm() - fv).abs() < 1e-12);
            }
        }

        #[test]
        fn transform_and_direct_convolution_agree(seed in any::<u64>()) {
            let f = random_density(31, seed);
            let g = random_density(31, seed.wrapping_add(1));
            let a = convolve_seq(field(31), f.values(), g.values()).unwrap();
            let b = convolve_direct(field(31), f.values(), g.values()).unwrap();
            let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-9 * scale);
            }
        }
    }
}
