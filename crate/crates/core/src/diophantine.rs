//! Simultaneous smallness by dilation: given residues r_1, ..., r_t, the
//! pigeonhole argument guarantees a nonzero m making every m*r_i small in
//! the balanced sense. The search here is exhaustive over m, returning
//! the smallest witness, so results are deterministic and every claimed
//! bound is certified by recomputation.

use crate::{Error, PrimeField, Result};
use serde::Serialize;

/// Representative of x mod p in (-p/2, p/2].
#[inline]
pub fn balanced(field: PrimeField, x: u64) -> i64 {
    let p = field.p();
    debug_assert!(x < p);
    if 2 * x <= p {
        x as i64
    } else {
        x as i64 - p as i64
    }
}

/// A nonzero dilation m with max_i |balanced(m * r_i)| <= bound, where
/// bound = p^{1 - 1/t} for t input residues. `achieved` is the certified
/// maximum, recomputable from m and the inputs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DilationWitness {
    pub m: u64,
    pub bound: f64,
    pub achieved: u64,
}

/// Smallest nonzero m with every |balanced(m * r_i)| at or below
/// `threshold`, together with the achieved maximum. Linear scan over m.
pub(crate) fn smallest_dilation_under(
    field: PrimeField,
    rs: &[u64],
    threshold: f64,
) -> Option<(u64, u64)> {
    let p = field.p();
    for m in 1..p {
        let mut worst = 0u64;
        let mut ok = true;
        for &r in rs {
            let c = balanced(field, field.mul(m, r)).unsigned_abs();
            if (c as f64) > threshold {
                ok = false;
                break;
            }
            worst = worst.max(c);
        }
        if ok {
            return Some((m, worst));
        }
    }
    None
}

/// Finds the smallest nonzero dilation m with
/// ||m * r_i / p|| <= p^{-1/t} for every i, i.e. |balanced(m * r_i)| <=
/// p^{1 - 1/t} (non-strict). The pigeonhole argument guarantees existence
/// for the parameter ranges this crate exercises; if the exhaustive scan
/// ever comes up empty the failure is reported rather than papered over.
pub fn find_dilation(field: PrimeField, rs: &[u64]) -> Result<DilationWitness> {
    if rs.is_empty() {
        return Err(Error::EmptySet);
    }
    for &r in rs {
        field.check_residue(r)?;
    }
    let p = field.p() as f64;
    let t = rs.len() as f64;
    let bound = p.powf(1.0 - 1.0 / t);
    match smallest_dilation_under(field, rs, bound) {
        Some((m, achieved)) => Ok(DilationWitness { m, bound, achieved }),
        None => Err(Error::DilationBoundUnreachable { p: field.p(), bound }),
    }
}

/// Balanced image {balanced(m * b) : b in set}, sorted ascending. A
/// bijection, so cardinality is preserved.
pub fn dilate_set(field: PrimeField, set: &[u64], m: u64) -> Result<Vec<i64>> {
    if m == 0 || m >= field.p() {
        return Err(Error::ZeroDilation);
    }
    let set = field.check_set(set)?;
    let mut out: Vec<i64> = set.iter().map(|&b| balanced(field, field.mul(m, b))).collect();
    out.sort_unstable();
    Ok(out)
}
