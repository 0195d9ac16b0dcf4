//! Representation counting and constructive unique-difference searches.
//!
//! Three search routines share the same certification discipline: any
//! difference they return is checked against a direct pair count before
//! it leaves the module.
//!
//! * [`find_unique_difference`]: for a single set B, a difference of two
//!   elements with exactly one representation. The constructive path
//!   dilates B until every element is small in the balanced sense
//!   (possible whenever |B| < ln p / ln 4) and takes max - min; the
//!   exhaustive path scans the full representation table.
//! * [`few_reps_difference`]: for a pair (B1, B2) with B1 of density at
//!   most 1/2 and at least 10 elements, a difference in B1 - B2 with at
//!   most 20 |B2| (ln|B1|)^2 / ln p representations, found by thinning B2
//!   to a random subset, locating a uniquely-represented difference
//!   against the subset, and re-counting against all of B2. Seeded,
//!   retried up to [`FEW_REPS_RETRY_CAP`] times, then an exhaustive
//!   argmin fallback.
//! * [`unique_difference_between`]: for a sparse pair (3 |B2| ln|B1| <
//!   ln p), a difference in B1 - B2 with exactly one representation,
//!   located at the edge of the longest empty interval of the dilated B1.

use crate::diophantine::{balanced, find_dilation, smallest_dilation_under, DilationWitness};
use crate::{Error, PrimeField, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Retry budget for the randomized few-representations search.
pub const FEW_REPS_RETRY_CAP: u32 = 100;

/// Exact representation counts nu(d) = |{(b1, b2) : b1 - b2 = d}| for a
/// pair of residue sets, built by enumerating all pairs.
#[derive(Debug, Clone)]
pub struct RepTable {
    field: PrimeField,
    counts: BTreeMap<u64, u64>,
    b1_len: usize,
    b2_len: usize,
}

impl RepTable {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// nu(d); zero for differences with no representation.
    pub fn nu(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// All (d, nu(d)) entries with nu > 0, ascending in d.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// Sum of all counts; always |B1| * |B2|.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Differences with exactly one representation, ascending.
    pub fn unique_differences(&self) -> Vec<u64> {
        self.counts.iter().filter(|(_, &c)| c == 1).map(|(&d, _)| d).collect()
    }

    /// Entry minimizing nu (ties broken by smallest d).
    pub fn min_count_entry(&self) -> (u64, u64) {
        let mut best: Option<(u64, u64)> = None;
        for (&d, &c) in &self.counts {
            match best {
                Some((_, bc)) if bc <= c => {}
                _ => best = Some((d, c)),
            }
        }
        best.expect("representation table is never empty")
    }

    pub fn b1_len(&self) -> usize {
        self.b1_len
    }

    pub fn b2_len(&self) -> usize {
        self.b2_len
    }
}

/// Builds the exact representation table for (b1, b2).
pub fn rep_table(field: PrimeField, b1: &[u64], b2: &[u64]) -> Result<RepTable> {
    let b1 = field.check_set(b1)?;
    let b2 = field.check_set(b2)?;
    if b1.is_empty() || b2.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut counts = BTreeMap::new();
    for &x in &b1 {
        for &y in &b2 {
            *counts.entry(field.sub(x, y)).or_insert(0u64) += 1;
        }
    }
    Ok(RepTable { field, counts, b1_len: b1.len(), b2_len: b2.len() })
}

/// Direct count of representations of d as b1 - b2; the oracle every
/// search result is certified against.
pub fn count_reps(field: PrimeField, b1: &[u64], b2: &[u64], d: u64) -> u64 {
    let mut n = 0;
    for &x in b1 {
        for &y in b2 {
            if field.sub(x, y) == d {
                n += 1;
            }
        }
    }
    n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UniqueMethod {
    Constructive,
    Exhaustive,
}

/// How to drive [`find_unique_difference`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Constructive when |B| < ln p / ln 4, exhaustive otherwise.
    Auto,
    Constructive,
    Exhaustive,
}

/// A difference with exactly one representation b1 - b2 over the stated
/// pair of sets, certified by direct counting.
#[derive(Debug, Clone, Serialize)]
pub struct UniqueDifference {
    pub d: u64,
    /// The unique pair (b1, b2) with b1 - b2 = d.
    pub witness: (u64, u64),
    pub method: UniqueMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dilation: Option<DilationWitness>,
}

/// Unique difference of a single set B (against itself).
///
/// Constructive mode requires |B| < ln p / ln 4 (equivalently p > 4^|B|):
/// dilate so every element is within p^{1 - 1/|B|} < p/4 of zero in the
/// balanced sense, then max - min is the unique extreme difference.
/// Exhaustive mode has no precondition but may find that no unique
/// difference exists (e.g. B = the whole field).
pub fn find_unique_difference(
    field: PrimeField,
    b: &[u64],
    mode: SearchMode,
) -> Result<UniqueDifference> {
    let b = field.check_set(b)?;
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    let p = field.p();
    let in_range = (b.len() as f64) < (p as f64).ln() / 4f64.ln();
    let constructive = match mode {
        SearchMode::Auto => in_range,
        SearchMode::Constructive => {
            if !in_range {
                return Err(Error::SmallSetPrecondition { t: b.len(), p });
            }
            true
        }
        SearchMode::Exhaustive => false,
    };
    if !constructive {
        return exhaustive_unique(field, &b, &b);
    }

    let witness = find_dilation(field, &b)?;
    let quarter = p as f64 / 4.0;
    let balanced_set: Vec<i64> = b.iter().map(|&x| balanced(field, field.mul(witness.m, x))).collect();
    if balanced_set.iter().any(|&c| (c.abs() as f64) >= quarter) {
        // Unreachable when p > 4^|B|: the dilation bound already sits
        // strictly inside (-p/4, p/4).
        return Err(Error::DilationBoundUnreachable { p, bound: quarter });
    }
    let (ix, _) = balanced_set.iter().enumerate().min_by_key(|&(_, &c)| c).unwrap();
    let (iy, _) = balanced_set.iter().enumerate().max_by_key(|&(_, &c)| c).unwrap();
    let spread = (balanced_set[iy] - balanced_set[ix]) as u64;
    let d = field.mul(field.inv(witness.m), spread);
    let nu = count_reps(field, &b, &b, d);
    if nu != 1 {
        return Err(Error::CertificationFailed { d, nu });
    }
    Ok(UniqueDifference {
        d,
        witness: (b[iy], b[ix]),
        method: UniqueMethod::Constructive,
        dilation: Some(witness),
    })
}

/// Unique difference between two sets under the sparsity hypothesis
/// 1 <= |B1| <= p/2 and 3 |B2| ln|B1| < ln p (strict).
pub fn unique_difference_between(
    field: PrimeField,
    b1: &[u64],
    b2: &[u64],
) -> Result<UniqueDifference> {
    let b1 = field.check_set(b1)?;
    let b2 = field.check_set(b2)?;
    if b1.is_empty() || b2.is_empty() {
        return Err(Error::EmptySet);
    }
    let p = field.p();
    let sparse = 3.0 * b2.len() as f64 * (b1.len() as f64).ln() < (p as f64).ln();
    if 2 * b1.len() as u64 > p || !sparse {
        return Err(Error::SparsePrecondition { b1: b1.len(), b2: b2.len(), p });
    }
    unique_between_impl(field, &b1, &b2)
}

/// The search behind [`unique_difference_between`], without the
/// precondition gate. Sets must be validated and sorted. Constructive
/// interval path first, exhaustive table scan as fallback; every result
/// is certified.
pub(crate) fn unique_between_impl(
    field: PrimeField,
    b1: &[u64],
    b2: &[u64],
) -> Result<UniqueDifference> {
    let p = field.p();
    if b1.len() >= 2 {
        let threshold = p as f64 / (b1.len() as f64).powi(3);
        if threshold >= 1.0 {
            if let Some((m, achieved)) = smallest_dilation_under(field, b2, threshold) {
                for cand in interval_candidates(field, m, b1, b2) {
                    let m_inv = field.inv(m);
                    let d = field.mul(m_inv, cand.d_dilated);
                    if count_reps(field, b1, b2, d) == 1 {
                        let w1 = field.mul(m_inv, cand.c1);
                        let w2 = field.mul(m_inv, cand.c2_residue(field));
                        debug_assert_eq!(field.sub(w1, w2), d);
                        return Ok(UniqueDifference {
                            d,
                            witness: (w1, w2),
                            method: UniqueMethod::Constructive,
                            dilation: Some(DilationWitness { m, bound: threshold, achieved }),
                        });
                    }
                }
            }
        }
    }
    exhaustive_unique(field, b1, b2)
}

/// Smallest d with nu(d) = 1, by full table scan.
fn exhaustive_unique(field: PrimeField, b1: &[u64], b2: &[u64]) -> Result<UniqueDifference> {
    let table = rep_table(field, b1, b2)?;
    let d = *table.unique_differences().first().ok_or(Error::NoUniqueDifference)?;
    let witness = b1
        .iter()
        .flat_map(|&x| b2.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| field.sub(x, y) == d)
        .expect("a counted difference has a witness");
    Ok(UniqueDifference { d, witness, method: UniqueMethod::Exhaustive, dilation: None })
}

struct IntervalCandidate {
    d_dilated: u64,
    c1: u64,
    c2_balanced: i64,
}

impl IntervalCandidate {
    fn c2_residue(&self, field: PrimeField) -> u64 {
        self.c2_balanced.rem_euclid(field.p() as i64) as u64
    }
}

/// The two edge candidates of the longest empty interval of m*B1: with
/// (u, v) the widest cyclic gap between consecutive dilated elements,
/// the candidates are u - min(m*B2) and v - max(m*B2), extremes taken
/// over balanced representatives. When the gap is wider than the spread
/// of m*B2 each candidate can only be represented at its own endpoint,
/// so at least one certifies as unique.
fn interval_candidates(
    field: PrimeField,
    m: u64,
    b1: &[u64],
    b2: &[u64],
) -> Vec<IntervalCandidate> {
    let p = field.p();
    let mut c1: Vec<u64> = b1.iter().map(|&b| field.mul(m, b)).collect();
    c1.sort_unstable();
    let s = c1.len();
    let mut best = (0usize, 0u64);
    for i in 0..s {
        let u = c1[i];
        let v = if i + 1 < s { c1[i + 1] } else { c1[0] + p };
        let gap = v - u;
        if gap > best.1 {
            best = (i, gap);
        }
    }
    let u = c1[best.0];
    let v = if best.0 + 1 < s { c1[best.0 + 1] } else { c1[0] + p } % p;

    let c2: Vec<i64> = b2.iter().map(|&b| balanced(field, field.mul(m, b))).collect();
    let min_c2 = *c2.iter().min().expect("b2 nonempty");
    let max_c2 = *c2.iter().max().expect("b2 nonempty");
    let pi = p as i64;
    vec![
        IntervalCandidate {
            d_dilated: (u as i64 - min_c2).rem_euclid(pi) as u64,
            c1: u,
            c2_balanced: min_c2,
        },
        IntervalCandidate {
            d_dilated: (v as i64 - max_c2).rem_euclid(pi) as u64,
            c1: v,
            c2_balanced: max_c2,
        },
    ]
}

/// Which path produced a few-representations result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchPath {
    Randomized,
    ExhaustiveFallback,
}

/// Outcome of the few-representations search. `bound_violated` flags the
/// (never yet observed) event that even the exhaustive minimum exceeds
/// the stated bound; it is reported as a finding rather than an error.
#[derive(Debug, Clone, Serialize)]
pub struct FewRepsDifference {
    pub d: u64,
    pub nu: u64,
    pub bound: f64,
    pub attempts: u32,
    pub path: SearchPath,
    pub bound_violated: bool,
}

/// Seeded search for d in B1 - B2 with nu(d) <= 20 |B2| (ln|B1|)^2 / ln p.
///
/// Preconditions: 10 <= |B1| <= p/2 and 3 |B2| ln|B1| > ln p. Each
/// attempt draws a random subset B' of B2 (element probability
/// ln p / (3 |B2| ln|B1|)), accepts it only when nonempty and smaller
/// than ln p / (2 ln|B1|), finds a difference represented uniquely
/// against B', and re-counts it against all of B2. After
/// [`FEW_REPS_RETRY_CAP`] failed attempts the exhaustive argmin of the
/// representation table is returned instead.
pub fn few_reps_difference(
    field: PrimeField,
    b1: &[u64],
    b2: &[u64],
    seed: u64,
) -> Result<FewRepsDifference> {
    let b1 = field.check_set(b1)?;
    let b2 = field.check_set(b2)?;
    if b2.is_empty() {
        return Err(Error::EmptySet);
    }
    let p = field.p();
    let dense = 3.0 * b2.len() as f64 * (b1.len() as f64).ln() > (p as f64).ln();
    if b1.len() < 10 || 2 * b1.len() as u64 > p || !dense {
        return Err(Error::FewRepsPrecondition { b1: b1.len(), b2: b2.len(), p });
    }
    let bound = few_reps_bound(p, b1.len(), b2.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=FEW_REPS_RETRY_CAP {
        if let Some((d, nu)) = few_reps_attempt(field, &b1, &b2, &mut rng) {
            if nu as f64 <= bound {
                return Ok(FewRepsDifference {
                    d,
                    nu,
                    bound,
                    attempts: attempt,
                    path: SearchPath::Randomized,
                    bound_violated: false,
                });
            }
        }
    }
    let (d, nu) = rep_table(field, &b1, &b2)?.min_count_entry();
    Ok(FewRepsDifference {
        d,
        nu,
        bound,
        attempts: FEW_REPS_RETRY_CAP,
        path: SearchPath::ExhaustiveFallback,
        bound_violated: nu as f64 > bound,
    })
}

/// 20 |B2| (ln|B1|)^2 / ln p.
pub fn few_reps_bound(p: u64, b1_len: usize, b2_len: usize) -> f64 {
    20.0 * b2_len as f64 * (b1_len as f64).ln().powi(2) / (p as f64).ln()
}

/// One randomized attempt: thin B2, locate a uniquely-represented
/// difference against the sample, return it with its full count.
pub(crate) fn few_reps_attempt(
    field: PrimeField,
    b1: &[u64],
    b2: &[u64],
    rng: &mut ChaCha8Rng,
) -> Option<(u64, u64)> {
    let p = field.p() as f64;
    let ln_b1 = (b1.len() as f64).ln();
    let q = p.ln() / (3.0 * b2.len() as f64 * ln_b1);
    let sample: Vec<u64> = b2.iter().copied().filter(|_| rng.gen_bool(q.min(1.0))).collect();
    if sample.is_empty() || (sample.len() as f64) >= p.ln() / (2.0 * ln_b1) {
        return None;
    }
    let threshold = p.powf(1.0 - 1.0 / sample.len() as f64);
    let (m, _) = smallest_dilation_under(field, &sample, threshold)?;
    let m_inv = field.inv(m);
    for cand in interval_candidates(field, m, b1, &sample) {
        let d = field.mul(m_inv, cand.d_dilated);
        if count_reps(field, b1, &sample, d) == 1 {
            return Some((d, count_reps(field, b1, b2, d)));
        }
    }
    None
}

/// Which self-difference branch applies to a set paired with itself.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum SelfDifferenceAnalysis {
    FewReps(FewRepsDifference),
    Unique(UniqueDifference),
    NotApplicable { reason: String },
}

/// Combined unique-difference report for one input set: the single-set
/// search (constructive or exhaustive) plus whichever two-set branch the
/// pair (B, B) satisfies.
#[derive(Debug, Clone, Serialize)]
pub struct UniqueDiffReport {
    pub p: u64,
    pub set_size: usize,
    pub seed: u64,
    pub unique: UniqueDifference,
    pub self_analysis: SelfDifferenceAnalysis,
}

/// Runs [`find_unique_difference`] in the requested mode and the
/// applicable (B, B) branch; the seed drives only the randomized branch.
pub fn analyze_unique_differences(
    field: PrimeField,
    set: &[u64],
    mode: SearchMode,
    seed: u64,
) -> Result<UniqueDiffReport> {
    let set = field.check_set(set)?;
    let unique = find_unique_difference(field, &set, mode)?;
    let p = field.p();
    let n = set.len() as f64;
    let value = 3.0 * n * n.ln();
    let ln_p = (p as f64).ln();
    let self_analysis = if set.len() >= 10 && 2 * set.len() as u64 <= p && value > ln_p {
        SelfDifferenceAnalysis::FewReps(few_reps_difference(field, &set, &set, seed)?)
    } else if 2 * set.len() as u64 <= p && value < ln_p {
        SelfDifferenceAnalysis::Unique(unique_difference_between(field, &set, &set)?)
    } else {
        SelfDifferenceAnalysis::NotApplicable {
            reason: format!(
                "neither branch applies: |B| = {}, 3|B| ln|B| = {:.3}, ln p = {:.3}",
                set.len(),
                value,
                ln_p
            ),
        }
    };
    Ok(UniqueDiffReport { p, set_size: set.len(), seed, unique, self_analysis })
}
