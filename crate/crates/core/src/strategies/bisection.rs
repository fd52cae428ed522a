//! Weighted-median bisection over a predicted distribution.

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::session::{Outcome, SearchSession, SearchStats};

/// Smallest position `k` in `[lo, hi]` such that the predicted mass strictly
/// before `k` and strictly after `k` are each at most half the range's mass.
///
/// If the range carries no predicted mass, falls back to the plain midpoint.
/// Runs in O(log n) on the cached cdf.
pub fn weighted_median(pred: &ProbDist, lo: usize, hi: usize) -> Result<usize> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    if hi >= pred.len() {
        return Err(Error::PositionOutOfRange {
            position: hi,
            len: pred.len(),
        });
    }
    let total = pred.range_mass(lo, hi);
    if total <= 0.0 {
        return Ok(lo + (hi - lo) / 2);
    }
    // The suffix condition mass(k+1..hi) <= total/2 rewrites to
    // cdf[k] >= cdf[hi] - total/2; the smallest such k automatically has
    // prefix mass < total/2 as well, and is the deterministic tie-break.
    let threshold = pred.cdf(hi) - 0.5 * total;
    let cdf = pred.cdf_slice();
    let offset = cdf[lo..=hi].partition_point(|&c| c < threshold);
    Ok((lo + offset).min(hi))
}

/// Repeatedly probes the weighted median of the prediction restricted to
/// the surviving range.
pub fn bisection_search(
    session: &mut SearchSession<'_>,
    pred: &ProbDist,
) -> Result<SearchStats> {
    if pred.len() != session.len() {
        return Err(Error::LengthMismatch {
            left: pred.len(),
            right: session.len(),
        });
    }
    let mut lo = 0i64;
    let mut hi = session.len() as i64 - 1;
    while lo <= hi {
        let k = weighted_median(pred, lo as usize, hi as usize)?;
        match session.probe(k)? {
            Outcome::Equal => {
                return Ok(SearchStats::single_phase(k, session.probe_count()))
            }
            Outcome::Less => hi = k as i64 - 1,
            Outcome::Greater => lo = k as i64 + 1,
        }
    }
    Err(Error::NotFound)
}

/// Bisection on `lambda * pred + (1 - lambda) * uniform`, a heuristic that
/// hedges the prediction against the uniform distribution.
pub fn convex_combination_search(
    session: &mut SearchSession<'_>,
    pred: &ProbDist,
    params: &super::ConvexParams,
) -> Result<SearchStats> {
    if pred.len() != session.len() {
        return Err(Error::LengthMismatch {
            left: pred.len(),
            right: session.len(),
        });
    }
    let uniform = ProbDist::uniform(session.len())?;
    let blended = pred.blend(&uniform, params.lambda())?;
    bisection_search(session, &blended)
}
