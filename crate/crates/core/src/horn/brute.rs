//! Exhaustive filler search over a level's candidates.

use super::{check_horn_shape, is_filler, Certificate, FillerCount, FillerResult, HornProblem, HornTarget, SearchBound};
use crate::error::{Error, Result};

/// The first filler in the target's canonical order. Infinite levels need a
/// `bound`; a negative answer then only covers the bounded candidates.
pub fn brute_force_filler<T: HornTarget + ?Sized>(
    target: &T,
    p: &HornProblem<T::Simplex>,
    bound: Option<u64>,
) -> Result<FillerResult<T::Simplex>> {
    check_horn_shape(target, p)?;
    let candidates = target.candidates(p.n, bound).ok_or(Error::NotEnumerable { level: p.n })?;
    for y in &candidates {
        if is_filler(target, p, y)? {
            return Ok(FillerResult::Filler(y.clone()));
        }
    }
    let searched = match bound {
        Some(bound) if !target.is_finite_level(p.n) => SearchBound::Values { bound, candidates: candidates.len() },
        _ => SearchBound::WholeLevel { candidates: candidates.len() },
    };
    Ok(FillerResult::NoFiller(Certificate::exhausted(searched)))
}

/// Counts fillers among the candidates, stopping at `limit`.
pub fn brute_force_count<T: HornTarget + ?Sized>(
    target: &T,
    p: &HornProblem<T::Simplex>,
    bound: Option<u64>,
    limit: usize,
) -> Result<FillerCount> {
    check_horn_shape(target, p)?;
    let candidates = target.candidates(p.n, bound).ok_or(Error::NotEnumerable { level: p.n })?;
    let mut count = 0;
    for y in &candidates {
        if is_filler(target, p, y)? {
            count += 1;
            if count >= limit {
                return Ok(FillerCount::AtLeast(limit));
            }
        }
    }
    Ok(FillerCount::Exactly(count))
}
