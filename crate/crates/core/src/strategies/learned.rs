//! The interleaved search: robust use of a single distributional prediction.
//!
//! The algorithm alternates two phases per iteration `i = 0, 1, 2, ...`:
//! up to `2^i` weighted-median bisection probes on the prediction, then a
//! doubling endpoint check that tests whether the target sits within reach
//! `d = min(2^(c * 2^i), r - l)` of either end of the surviving range and,
//! if so, finishes with a plain binary search there. The bisection phase
//! wins when the prediction is accurate; the endpoint phase caps the damage
//! when it is not.

use super::bisection::weighted_median;
use super::classic::binary_search_range;
use super::LearnedParams;
use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::session::{Outcome, SearchSession, SearchStats};

pub fn learned_search(
    session: &mut SearchSession<'_>,
    pred: &ProbDist,
    params: &LearnedParams,
) -> Result<SearchStats> {
    if pred.len() != session.len() {
        return Err(Error::LengthMismatch {
            left: pred.len(),
            right: session.len(),
        });
    }
    let mut lo = 0i64;
    let mut hi = session.len() as i64 - 1;
    let mut bisect_probes = 0u64;
    for iteration in 0u32.. {
        // Bisection phase: up to 2^iteration weighted-median probes.
        let steps = 1u64 << iteration.min(62);
        for _ in 0..steps {
            if lo > hi {
                return Err(Error::NotFound);
            }
            let k = weighted_median(pred, lo as usize, hi as usize)?;
            bisect_probes += 1;
            match session.probe(k)? {
                Outcome::Equal => return Ok(stats(session, k, iteration, bisect_probes)),
                Outcome::Less => hi = k as i64 - 1,
                Outcome::Greater => lo = k as i64 + 1,
            }
        }
        if lo > hi {
            return Err(Error::NotFound);
        }
        // Endpoint phase.
        let d = endpoint_reach(params.growth_factor(), iteration, hi - lo);
        match endpoint_phase(session, lo, hi, d)? {
            EndpointOutcome::Found(pos) => {
                return Ok(stats(session, pos, iteration, bisect_probes))
            }
            EndpointOutcome::Continue { lo: l, hi: h } => {
                lo = l;
                hi = h;
            }
        }
    }
    unreachable!("the endpoint phase eventually covers the whole range")
}

fn stats(
    session: &SearchSession<'_>,
    found: usize,
    iteration: u32,
    bisect_probes: u64,
) -> SearchStats {
    let total = session.probe_count();
    SearchStats {
        found,
        probes: total,
        iterations: iteration + 1,
        phase_probes: (bisect_probes, total - bisect_probes),
    }
}

/// Endpoint reach `d = min(2^(c * 2^iteration), width)`, with the exponent
/// saturating at 63 bits (beyond which the min clamps to the width anyway).
pub(crate) fn endpoint_reach(c: u32, iteration: u32, width: i64) -> i64 {
    debug_assert!(width >= 0);
    let exponent = (c as u64).saturating_mul(1u64 << iteration.min(62));
    if exponent >= 63 {
        width
    } else {
        width.min(1i64 << exponent)
    }
}

pub(crate) enum EndpointOutcome {
    Found(usize),
    Continue { lo: i64, hi: i64 },
}

/// Tests whether the target lies within `d` of either end of `[lo, hi]`.
/// Probes `lo + d` first, then `hi - d`; a positive membership test binary
/// searches the matching end, intersected with what this phase's probes
/// already established. Otherwise the middle `[lo+d+1, hi-d-1]` survives.
pub(crate) fn endpoint_phase(
    session: &mut SearchSession<'_>,
    lo: i64,
    hi: i64,
    d: i64,
) -> Result<EndpointOutcome> {
    debug_assert!(lo <= hi && d >= 0 && lo + d <= hi);
    let left = lo + d;
    match session.probe(left as usize)? {
        Outcome::Equal => return Ok(EndpointOutcome::Found(left as usize)),
        Outcome::Less => {
            let found = binary_search_range(session, lo, left - 1)?;
            return Ok(EndpointOutcome::Found(found));
        }
        Outcome::Greater => {}
    }
    if left == hi {
        // Target beyond the top of the range: contradiction.
        return Err(Error::NotFound);
    }
    let right = hi - d;
    match session.probe(right as usize)? {
        Outcome::Equal => Ok(EndpointOutcome::Found(right as usize)),
        Outcome::Greater => {
            let found = binary_search_range(session, (right + 1).max(left + 1), hi)?;
            Ok(EndpointOutcome::Found(found))
        }
        Outcome::Less => {
            if left + 1 > right - 1 {
                return Err(Error::NotFound);
            }
            Ok(EndpointOutcome::Continue {
                lo: left + 1,
                hi: right - 1,
            })
        }
    }
}
