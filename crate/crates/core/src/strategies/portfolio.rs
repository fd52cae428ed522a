//! Interleaved search over a portfolio of predictions.
//!
//! Same two-phase structure as the single-prediction search, but each
//! bisection step binary-searches the probe-point list made of the current
//! endpoints plus the weighted median of every prediction that still has
//! mass in the range. Each step therefore halves every live prediction's
//! remaining mass at a cost of about `log2(m + 2)` probes.

use super::bisection::weighted_median;
use super::learned::{endpoint_phase, endpoint_reach, EndpointOutcome};
use super::LearnedParams;
use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::session::{Outcome, SearchSession, SearchStats};

pub fn portfolio_search(
    session: &mut SearchSession<'_>,
    preds: &[ProbDist],
    params: &LearnedParams,
) -> Result<SearchStats> {
    if preds.is_empty() {
        return Err(Error::InvalidParameter {
            name: "predictions",
            reason: "portfolio needs at least one prediction".to_string(),
        });
    }
    for pred in preds {
        if pred.len() != session.len() {
            return Err(Error::LengthMismatch {
                left: pred.len(),
                right: session.len(),
            });
        }
    }
    let mut lo = 0i64;
    let mut hi = session.len() as i64 - 1;
    let mut bisect_probes = 0u64;
    let mut points: Vec<i64> = Vec::with_capacity(preds.len() + 2);
    for iteration in 0u32.. {
        let steps = 1u64 << iteration.min(62);
        for _ in 0..steps {
            if lo > hi {
                return Err(Error::NotFound);
            }
            points.clear();
            points.push(lo);
            points.push(hi);
            let mut live = false;
            for pred in preds {
                if pred.range_mass(lo as usize, hi as usize) > 0.0 {
                    points.push(weighted_median(pred, lo as usize, hi as usize)? as i64);
                    live = true;
                }
            }
            if !live {
                points.push(lo + (hi - lo) / 2);
            }
            points.sort_unstable();
            points.dedup();

            // Three-way binary search over the probe-point list. On exit,
            // the target sits strictly between points[b] and points[a].
            let mut a = 0i64;
            let mut b = points.len() as i64 - 1;
            let mut found = None;
            while a <= b {
                let mid = a + (b - a) / 2;
                bisect_probes += 1;
                match session.probe(points[mid as usize] as usize)? {
                    Outcome::Equal => {
                        found = Some(points[mid as usize] as usize);
                        break;
                    }
                    Outcome::Less => b = mid - 1,
                    Outcome::Greater => a = mid + 1,
                }
            }
            if let Some(pos) = found {
                return Ok(stats(session, pos, iteration, bisect_probes));
            }
            if b < 0 || a >= points.len() as i64 {
                // Target below lo or above hi: contradiction.
                return Err(Error::NotFound);
            }
            lo = points[b as usize] + 1;
            hi = points[a as usize] - 1;
            if lo > hi {
                return Err(Error::NotFound);
            }
        }
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
