//! Prediction-agnostic midpoint binary search.

use crate::error::{Error, Result};
use crate::session::{SearchSession, SearchStats};

/// Classic binary search: probe the midpoint of the current range, recurse
/// on the surviving side. Uses at most `floor(log2 n) + 1` probes.
pub fn classic_search(session: &mut SearchSession<'_>) -> Result<SearchStats> {
    let hi = session.len() as i64 - 1;
    let found = binary_search_range(session, 0, hi)?;
    Ok(SearchStats::single_phase(found, session.probe_count()))
}

/// Midpoint binary search over the inclusive position range `[lo, hi]`.
/// An empty range (lo > hi) means the probes so far contradict the target's
/// presence, reported as `NotFound`.
pub(crate) fn binary_search_range(
    session: &mut SearchSession<'_>,
    mut lo: i64,
    mut hi: i64,
) -> Result<usize> {
    use crate::session::Outcome::*;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match session.probe(mid as usize)? {
            Equal => return Ok(mid as usize),
            Less => hi = mid - 1,
            Greater => lo = mid + 1,
        }
    }
    Err(Error::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keys::KeyArray;

    #[test]
    fn single_key_costs_one() {
        let keys = KeyArray::new(vec![5]).unwrap();
        let mut s = SearchSession::new(&keys, 0).unwrap();
        let stats = classic_search(&mut s).unwrap();
        assert_eq!(stats.found, 0);
        assert_eq!(stats.probes, 1);
    }

    #[test]
    fn midpoint_hit_costs_one() {
        let keys = KeyArray::contiguous(0, 6).unwrap();
        let mut s = SearchSession::new(&keys, 3).unwrap();
        assert_eq!(classic_search(&mut s).unwrap().probes, 1);
    }

    #[test]
    fn worst_case_probe_budget() {
        for n in [1usize, 2, 3, 7, 15, 64, 100, 1023] {
            let keys = KeyArray::contiguous(0, n as i64 - 1).unwrap();
            let budget = (n as f64).log2().floor() as u64 + 1;
            for target in 0..n {
                let mut s = SearchSession::new(&keys, target).unwrap();
                let stats = classic_search(&mut s).unwrap();
                assert_eq!(stats.found, target);
                assert!(
                    stats.probes <= budget,
                    "n={n} target={target}: {} > {budget}",
                    stats.probes
                );
            }
        }
    }

    #[test]
    fn n_1023_worst_target_uses_ten_probes() {
        let keys = KeyArray::contiguous(0, 1022).unwrap();
        let mut worst = 0;
        for target in 0..1023 {
            let mut s = SearchSession::new(&keys, target).unwrap();
            worst = worst.max(classic_search(&mut s).unwrap().probes);
        }
        assert_eq!(worst, 10);
    }
}
