//! Input parsing, example-family generators, and report serialization.
//!
//! Two input formats are accepted: a JSON document
//! `{"kind": "set" | "values" | "fourier", "p": <prime>, "payload": ...}`
//! and a plain-text set format (header line `p=<prime>`, one residue per
//! line, `#` comments). Reports serialize to JSON with a fixed field
//! order and every float printed with 12 significant digits, so a seeded
//! run is byte-reproducible from its inputs.

use crate::density::DensityFunction;
use crate::spectrum::Spectrum;
use crate::transform::{dft, idft, Roots};
use crate::{Error, PrimeField, Result, DEFAULT_TOL};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Example families for generated inputs.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Seeded random indicator; each residue included with probability
    /// `density` in (0, 1].
    IndicatorRandom { density: f64 },
    /// Indicator of {start, ..., start + length - 1} mod p.
    Interval { start: u64, length: u64 },
    /// Indicator of the arithmetic progression start + i * step.
    ArithmeticProgression { start: u64, step: u64, length: u64 },
    /// Indicator of the nonzero quadratic residues.
    QuadraticResidues,
    /// f(n) = 1/2 + cos(2 pi n / p) / 2: transform p/2 at zero and p/4 at
    /// the two unit frequencies.
    SpectralRemark,
    /// Prescribed sparse spectrum, validated by inversion.
    SpectralCustom { coefficients: Vec<(u64, f64, f64)> },
}

/// Deterministic generator for the example families; only
/// `IndicatorRandom` consumes the seed.
pub fn generate(field: PrimeField, family: &Family, seed: u64) -> Result<DensityFunction> {
    let p = field.p();
    match family {
        Family::IndicatorRandom { density } => {
            if !(*density > 0.0 && *density <= 1.0) {
                return Err(Error::InvalidParams(format!(
                    "density {density} outside (0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let values: Vec<f64> =
                (0..p).map(|_| if rng.gen_bool(*density) { 1.0 } else { 0.0 }).collect();
            DensityFunction::from_values(field, values)
        }
        Family::Interval { start, length } => {
            field.check_residue(*start)?;
            if *length == 0 || *length > p {
                return Err(Error::InvalidParams(format!(
                    "interval length {length} outside 1..={p}"
                )));
            }
            let mut values = vec![0.0; p as usize];
            for i in 0..*length {
                values[((start + i) % p) as usize] = 1.0;
            }
            DensityFunction::from_values(field, values)
        }
        Family::ArithmeticProgression { start, step, length } => {
            field.check_residue(*start)?;
            if *step == 0 || *step >= p {
                return Err(Error::InvalidParams(format!("step {step} outside 1..{p}")));
            }
            if *length == 0 || *length > p {
                return Err(Error::InvalidParams(format!(
                    "progression length {length} outside 1..={p}"
                )));
            }
            let mut values = vec![0.0; p as usize];
            for i in 0..*length {
                values[field.add(*start, field.mul(i, *step)) as usize] = 1.0;
            }
            DensityFunction::from_values(field, values)
        }
        Family::QuadraticResidues => {
            let mut values = vec![0.0; p as usize];
            for n in 1..p {
                values[field.mul(n, n) as usize] = 1.0;
            }
            DensityFunction::from_values(field, values)
        }
        Family::SpectralRemark => {
            let values: Vec<f64> = (0..p)
                .map(|n| 0.5 + 0.5 * (std::f64::consts::TAU * n as f64 / p as f64).cos())
                .collect();
            DensityFunction::from_values(field, values)
        }
        Family::SpectralCustom { coefficients } => {
            density_from_fourier(field, coefficients, DEFAULT_TOL)
        }
    }
}

/// A parsed input document, prior to conversion into a density function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputSpec {
    Set { p: u64, payload: Vec<u64> },
    Values { p: u64, payload: Vec<f64> },
    Fourier { p: u64, payload: Vec<(u64, f64, f64)> },
}

impl InputSpec {
    pub fn p(&self) -> u64 {
        match self {
            InputSpec::Set { p, .. } | InputSpec::Values { p, .. } | InputSpec::Fourier { p, .. } => {
                *p
            }
        }
    }

    /// Validates the payload against a certified field and builds the
    /// function. Fourier payloads must invert to a real [0,1] function
    /// within `tol`.
    pub fn into_density(&self, tol: f64) -> Result<DensityFunction> {
        let field = PrimeField::new(self.p())?;
        match self {
            InputSpec::Set { payload, .. } => DensityFunction::indicator(field, payload),
            InputSpec::Values { payload, .. } => {
                DensityFunction::from_values(field, payload.clone())
            }
            InputSpec::Fourier { payload, .. } => density_from_fourier(field, payload, tol),
        }
    }
}

fn density_from_fourier(
    field: PrimeField,
    payload: &[(u64, f64, f64)],
    tol: f64,
) -> Result<DensityFunction> {
    let p = field.p();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); p as usize];
    let mut seen = std::collections::BTreeSet::new();
    for &(freq, re, im) in payload {
        field.check_residue(freq)?;
        if !seen.insert(freq) {
            return Err(Error::InvalidSpectrumInput(format!("duplicate frequency {freq}")));
        }
        coeffs[freq as usize] = Complex64::new(re, im);
    }
    let s = Spectrum::new(field, coeffs)?;
    let inv = idft(&s, tol).map_err(|e| match e {
        Error::NonNegligibleImaginary { max_imag, .. } => Error::InvalidSpectrumInput(format!(
            "inversion has imaginary residue {max_imag:.3e} above {tol:.3e}"
        )),
        other => other,
    })?;
    let values: Vec<f64> = inv
        .values
        .iter()
        .enumerate()
        .map(|(n, &v)| {
            if v < -tol || v > 1.0 + tol {
                Err(Error::InvalidSpectrumInput(format!(
                    "inverted value {v} at n = {n} outside [0,1]"
                )))
            } else {
                Ok(v.clamp(0.0, 1.0))
            }
        })
        .collect::<Result<_>>()?;
    DensityFunction::from_values(field, values)
}

/// Parses an input document: JSON when the first significant byte is
/// `{`, the plain-text set format otherwise.
pub fn parse_input(text: &str) -> Result<InputSpec> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
    } else {
        parse_text_set(text)
    }
}

/// Parses and validates in one step.
pub fn parse_density(text: &str, tol: f64) -> Result<DensityFunction> {
    parse_input(text)?.into_density(tol)
}

fn parse_text_set(text: &str) -> Result<InputSpec> {
    let mut p: Option<u64> = None;
    let mut payload = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if p.is_none() {
            let spec = line
                .strip_prefix("p=")
                .or_else(|| line.strip_prefix("p ").map(str::trim))
                .ok_or_else(|| {
                    Error::MalformedInput(format!(
                        "line {}: expected header 'p=<prime>', got '{line}'",
                        lineno + 1
                    ))
                })?;
            p = Some(spec.trim().parse().map_err(|_| {
                Error::MalformedInput(format!("line {}: invalid modulus '{spec}'", lineno + 1))
            })?);
        } else {
            payload.push(line.parse().map_err(|_| {
                Error::MalformedInput(format!("line {}: invalid residue '{line}'", lineno + 1))
            })?);
        }
    }
    let p = p.ok_or_else(|| Error::MalformedInput("missing 'p=<prime>' header".into()))?;
    Ok(InputSpec::Set { p, payload })
}

/// Serializes an input spec back to its canonical JSON form.
pub fn serialize_input(spec: &InputSpec) -> String {
    to_json(spec)
}

/// One spectrum row for reports: rank, frequency, magnitude, and the raw
/// coefficient.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub rank: usize,
    pub frequency: u64,
    pub magnitude: f64,
    pub real: f64,
    pub imag: f64,
}

/// Spectrum plus gap certificates for one input.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub p: u64,
    pub theta: f64,
    pub indicator: bool,
    pub tol: f64,
    pub spectrum: Vec<SpectrumRow>,
    pub gaps: Vec<crate::spectrum::GapCertificate>,
}

/// Builds the analyze report: the full ordered spectrum and either the
/// certificate at rank `k` or certificates at every rank with a positive
/// lambda.
pub fn analyze_report(f: &DensityFunction, k: Option<usize>, tol: f64) -> Result<AnalyzeReport> {
    let s = dft(f);
    let spectrum: Vec<SpectrumRow> = (1..=s.field().len())
        .map(|rank| {
            let frequency = s.order()[rank - 1];
            let c = s.coeff_at(frequency);
            SpectrumRow {
                rank,
                frequency,
                magnitude: s.magnitudes()[rank - 1],
                real: c.re,
                imag: c.im,
            }
        })
        .collect();
    let gaps = match k {
        Some(k) => vec![s.gap(k)?],
        None => (1..s.field().len())
            .map_while(|k| s.gap(k).ok())
            .collect(),
    };
    Ok(AnalyzeReport {
        p: f.field().p(),
        theta: f.theta(),
        indicator: f.is_indicator(),
        tol,
        spectrum,
        gaps,
    })
}

struct SigFigFormatter;

impl serde_json::ser::Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.11e}")
    }
}

/// JSON with fixed field order and 12-significant-digit floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    value.serialize(&mut ser).expect("reports serialize infallibly");
    String::from_utf8(out).expect("serialized JSON is UTF-8")
}

/// 12-significant-digit float formatting shared by the CSV emitters.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.11e}")
}

/// CSV rows (rank, frequency, magnitude, real, imag) for a spectrum.
pub fn spectrum_csv(report: &AnalyzeReport) -> String {
    let mut out = String::from("rank,frequency,magnitude,real,imag\n");
    for row in &report.spectrum {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.rank,
            row.frequency,
            fmt_float(row.magnitude),
            fmt_float(row.real),
            fmt_float(row.imag)
        ));
    }
    out
}

/// CSV for gap certificates (k, gamma, lambda_k, lambda_k1).
pub fn gaps_csv(gaps: &[crate::spectrum::GapCertificate]) -> String {
    let mut out = String::from("k,gamma,lambda_k,lambda_k1\n");
    for g in gaps {
        out.push_str(&format!(
            "{},{},{},{}\n",
            g.k,
            fmt_float(g.gamma),
            fmt_float(g.lambda_k),
            fmt_float(g.lambda_k1)
        ));
    }
    out
}

/// Single-row CSV for a coverage report.
pub fn coverage_csv(r: &crate::coverage::CoverageReport) -> String {
    let mut out = String::from(
        "p,k,gamma,theta,lambda_k,bound,exact_support,slack,d,a_x,a_y,in_hypothesis,falsification\n",
    );
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        r.p,
        r.k,
        fmt_float(r.gamma),
        fmt_float(r.theta),
        fmt_float(r.lambda_k),
        fmt_float(r.bound),
        r.exact_support,
        fmt_float(r.slack),
        r.d,
        r.a_x,
        r.a_y,
        r.in_hypothesis,
        r.falsification
    ));
    out
}

/// Per-rank CSV for a probe table.
pub fn probe_csv(t: &crate::coverage::ProbeTable) -> String {
    let mut out = String::from(
        "k,trials_evaluated,best_gamma,strong_count,min_coverage_strong,theorem_range,bound_violations\n",
    );
    for row in &t.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.k,
            row.trials_evaluated,
            row.best_gamma.map_or(String::new(), fmt_float),
            row.strong_count,
            row.min_coverage_strong.map_or(String::new(), |c| c.to_string()),
            row.theorem_range,
            row.bound_violations
        ));
    }
    out
}

/// Single-row CSV for a t-fold verdict; chain differences joined by ';'.
pub fn verdict_csv(v: &crate::repeated::TfoldVerdict) -> String {
    let ds = v
        .chain_ds
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(";");
    let mut out = String::from(
        "p,k,t,seed,gamma,gamma_threshold,gamma_ok,k_in_window,in_hypothesis,min_value,positive_everywhere,m,ds,base,falsification\n",
    );
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        v.p,
        v.k,
        v.t,
        v.seed,
        fmt_float(v.gamma),
        fmt_float(v.gamma_threshold),
        v.gamma_ok,
        v.k_in_window,
        v.in_hypothesis,
        fmt_float(v.min_value),
        v.positive_everywhere,
        v.chain_ds.len(),
        ds,
        v.chain_base,
        v.falsification
    ));
    out
}

/// Single-row CSV for a unique-difference report.
pub fn unique_diff_csv(r: &crate::differences::UniqueDiffReport) -> String {
    let mut out =
        String::from("p,set_size,seed,method,d,witness_b1,witness_b2,dilation_m,self_branch\n");
    let (m, branch) = (
        r.unique.dilation.map_or(String::new(), |w| w.m.to_string()),
        match &r.self_analysis {
            crate::differences::SelfDifferenceAnalysis::FewReps(_) => "few-reps",
            crate::differences::SelfDifferenceAnalysis::Unique(_) => "unique",
            crate::differences::SelfDifferenceAnalysis::NotApplicable { .. } => "not-applicable",
        },
    );
    out.push_str(&format!(
        "{},{},{},{:?},{},{},{},{},{}\n",
        r.p,
        r.set_size,
        r.seed,
        r.unique.method,
        r.unique.d,
        r.unique.witness.0,
        r.unique.witness.1,
        m,
        branch
    ));
    out
}

/// Local helper re-exported for tests: builds the cosine-bump function.
pub fn cosine_bump(field: PrimeField) -> DensityFunction {
    generate(field, &Family::SpectralRemark, 0).expect("cosine bump is always valid")
}

/// Frequency-shift check used when validating spectral inputs in tests.
pub fn roots_forward(field: PrimeField, seq: &[Complex64]) -> Vec<Complex64> {
    Roots::new(field).forward(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn quadratic_residues_mod_seven() {
        let f = generate(field(7), &Family::QuadraticResidues, 0).unwrap();
        assert_eq!(f.support(), vec![1, 2, 4]);
    }

    #[test]
    fn interval_at_zero() {
        let f = generate(field(5), &Family::Interval { start: 0, length: 3 }, 0).unwrap();
        assert_eq!(f.support(), vec![0, 1, 2]);
        let wrap = generate(field(5), &Family::Interval { start: 4, length: 2 }, 0).unwrap();
        assert_eq!(wrap.support(), vec![0, 4]);
    }

    #[test]
    fn progression_generator() {
        let f = generate(
            field(11),
            &Family::ArithmeticProgression { start: 1, step: 3, length: 4 },
            0,
        )
        .unwrap();
        assert_eq!(f.support(), vec![1, 4, 7, 10]);
    }

    #[test]
    fn cosine_bump_values_and_spectrum() {
        let f = generate(field(11), &Family::SpectralRemark, 0).unwrap();
        assert!((f.values()[0] - 1.0).abs() < 1e-12);
        assert!((f.values()[1] - 0.9206267664155906).abs() < 1e-9);
        let s = dft(&f);
        assert!((s.coeff_at(0).re - 5.5).abs() < 1e-9);
        assert!((s.coeff_at(1).norm() - 2.75).abs() < 1e-9);
        assert!((s.coeff_at(10).norm() - 2.75).abs() < 1e-9);
    }

    #[test]
    fn random_indicator_params_checked() {
        assert!(matches!(
            generate(field(11), &Family::IndicatorRandom { density: 0.0 }, 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            generate(field(11), &Family::IndicatorRandom { density: 1.5 }, 0),
            Err(Error::InvalidParams(_))
        ));
        let a = generate(field(101), &Family::IndicatorRandom { density: 0.5 }, 9).unwrap();
        let b = generate(field(101), &Family::IndicatorRandom { density: 0.5 }, 9).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn set_json_roundtrip() {
        let text = r#"{"kind":"set","p":101,"payload":[1,5,10]}"#;
        let spec = parse_input(text).unwrap();
        let f = spec.into_density(1e-9).unwrap();
        assert!(f.is_indicator());
        assert_eq!(f.support(), vec![1, 5, 10]);
        // serialize(parse(x)) reparses to the same spec.
        let again = parse_input(&serialize_input(&spec)).unwrap();
        assert_eq!(spec, again);
    }

    #[test]
    fn fourier_input_matches_generator() {
        let text = r#"{"kind":"fourier","p":11,"payload":[[0,5.5,0],[1,2.75,0],[10,2.75,0]]}"#;
        let f = parse_density(text, 1e-9).unwrap();
        let bump = generate(field(11), &Family::SpectralRemark, 0).unwrap();
        for (a, b) in f.values().iter().zip(bump.values()) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        let text = r#"{"kind":"set","p":10,"payload":[1]}"#;
        let err = parse_input(text).unwrap().into_density(1e-9).unwrap_err();
        assert!(matches!(err, Error::CompositeModulus(10)));
    }

    #[test]
    fn malformed_documents_have_diagnostics() {
        assert!(matches!(parse_input("{not json"), Err(Error::MalformedInput(_))));
        assert!(matches!(
            parse_input(r#"{"kind":"set","p":11}"#),
            Err(Error::MalformedInput(_))
        ));
        let dup = r#"{"kind":"set","p":11,"payload":[3,3]}"#;
        assert!(matches!(
            parse_input(dup).unwrap().into_density(1e-9),
            Err(Error::DuplicateResidue(3))
        ));
        let oor = r#"{"kind":"set","p":11,"payload":[11]}"#;
        assert!(matches!(
            parse_input(oor).unwrap().into_density(1e-9),
            Err(Error::ResidueOutOfRange { residue: 11, p: 11 })
        ));
        let bad_vals = r#"{"kind":"values","p":5,"payload":[0.2,1.4,0,0,0]}"#;
        assert!(matches!(
            parse_input(bad_vals).unwrap().into_density(1e-9),
            Err(Error::ValueOutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn non_real_spectrum_rejected() {
        // A lone coefficient at frequency 1 cannot be a real function.
        let text = r#"{"kind":"fourier","p":7,"payload":[[1,1.0,0]]}"#;
        assert!(matches!(
            parse_input(text).unwrap().into_density(1e-9),
            Err(Error::InvalidSpectrumInput(_))
        ));
        let dup = r#"{"kind":"fourier","p":7,"payload":[[1,1.0,0],[1,2.0,0]]}"#;
        assert!(matches!(
            parse_input(dup).unwrap().into_density(1e-9),
            Err(Error::InvalidSpectrumInput(_))
        ));
    }

    #[test]
    fn text_set_format() {
        let text = "# hand-authored example\np=101\n1\n5\n10 # trailing comment\n";
        let spec = parse_text_set(text).unwrap();
        assert_eq!(spec, InputSpec::Set { p: 101, payload: vec![1, 5, 10] });
        assert!(matches!(parse_input("1\n2\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_input("p=abc\n"), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn analyze_report_shapes() {
        let f = generate(field(11), &Family::SpectralRemark, 0).unwrap();
        let all = analyze_report(&f, None, 1e-9).unwrap();
        assert_eq!(all.spectrum.len(), 11);
        // Ranks past 3 have lambda = 0, so only 3 certificates exist.
        assert_eq!(all.gaps.len(), 3);
        let one = analyze_report(&f, Some(3), 1e-9).unwrap();
        assert_eq!(one.gaps.len(), 1);
        assert_eq!(one.gaps[0].k, 3);
    }

    #[test]
    fn json_floats_have_twelve_digits() {
        #[derive(Serialize)]
        struct Sample {
            x: f64,
            y: f64,
        }
        let s = to_json(&Sample { x: 5.5, y: 1.0 / 3.0 });
        assert_eq!(s, r#"{"x":5.50000000000e0,"y":3.33333333333e-1}"#);
    }

    #[test]
    fn coverage_json_key_order() {
        let f = generate(field(11), &Family::SpectralRemark, 0).unwrap();
        let r = crate::coverage::coverage_report(&f, 3).unwrap();
        let json = to_json(&r);
        let positions: Vec<usize> = ["\"p\"", "\"k\"", "\"gamma\"", "\"theta\"", "\"lambda_k\"",
            "\"bound\"", "\"exact_support\"", "\"slack\"", "\"d\"", "\"a_x\"", "\"a_y\""]
            .iter()
            .map(|key| json.find(key).unwrap_or_else(|| panic!("missing {key}")))
            .collect();
        for w in positions.windows(2) {
            assert!(w[0] < w[1], "schema keys out of order in {json}");
        }
    }

    #[test]
    fn csv_emitters_are_stable() {
        let f = generate(field(11), &Family::SpectralRemark, 0).unwrap();
        let report = analyze_report(&f, None, 1e-9).unwrap();
        let csv = spectrum_csv(&report);
        assert!(csv.starts_with("rank,frequency,magnitude,real,imag\n"));
        assert_eq!(csv.lines().count(), 12);
        let cov = crate::coverage::coverage_report(&f, 3).unwrap();
        let csv = coverage_csv(&cov);
        assert_eq!(csv.lines().count(), 2);
        assert_eq!(coverage_csv(&cov), csv);
    }
}
