//! Doubling (galloping) search from a point guess.

use super::classic::binary_search_range;
use crate::error::{Error, Result};
use crate::session::{Outcome, SearchSession, SearchStats};

/// Probes the guess, then expands toward the target with offsets 1, 2, 4,
/// ... (clamped to the array bounds) until a probe brackets it, and finishes
/// with a midpoint binary search inside the bracket.
///
/// Uses at most `2 * log2(max(|guess - target|, 2)) + 4` probes.
pub fn doubling_point_search(
    session: &mut SearchSession<'_>,
    guess: usize,
) -> Result<SearchStats> {
    let n = session.len() as i64;
    if guess as i64 >= n {
        return Err(Error::PositionOutOfRange {
            position: guess,
            len: session.len(),
        });
    }
    let guess = guess as i64;
    let found = match session.probe(guess as usize)? {
        Outcome::Equal => guess as usize,
        Outcome::Greater => gallop(session, guess, 1, n)?,
        Outcome::Less => gallop(session, guess, -1, n)?,
    };
    Ok(SearchStats::single_phase(found, session.probe_count()))
}

/// Exponential expansion in one direction. `direction` is +1 when the
/// target is above the guess, -1 when below.
fn gallop(
    session: &mut SearchSession<'_>,
    guess: i64,
    direction: i64,
    n: i64,
) -> Result<usize> {
    let edge = if direction > 0 { n - 1 } else { 0 };
    // Positions strictly between the last "target is further" probe and the
    // first "target is nearer" probe form the bracket.
    let mut near = guess; // probed, target strictly beyond it
    let mut step = 1i64;
    loop {
        let pos = if direction > 0 {
            (guess + step).min(edge)
        } else {
            (guess - step).max(edge)
        };
        match session.probe(pos as usize)? {
            Outcome::Equal => return Ok(pos as usize),
            outcome => {
                let beyond = (outcome == Outcome::Greater) == (direction > 0);
                if beyond {
                    if pos == edge {
                        // Target lies past the array boundary.
                        return Err(Error::NotFound);
                    }
                    near = pos;
                    step *= 2;
                } else {
                    // Bracketed: target strictly between `near` and `pos`.
                    let (lo, hi) = if direction > 0 {
                        (near + 1, pos - 1)
                    } else {
                        (pos + 1, near - 1)
                    };
                    return binary_search_range(session, lo, hi);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keys::KeyArray;

    fn run(n: usize, guess: usize, target: usize) -> SearchStats {
        let keys = KeyArray::contiguous(0, n as i64 - 1).unwrap();
        let mut s = SearchSession::new(&keys, target).unwrap();
        let stats = doubling_point_search(&mut s, guess).unwrap();
        assert_eq!(stats.found, target);
        assert!(s.verify_range_invariant());
        stats
    }

    #[test]
    fn exact_guess_costs_one() {
        assert_eq!(run(100, 37, 37).probes, 1);
    }

    #[test]
    fn adjacent_guess_costs_at_most_three() {
        assert!(run(100, 37, 38).probes <= 3);
        assert!(run(100, 37, 36).probes <= 3);
        assert!(run(2, 0, 1).probes <= 3);
    }

    #[test]
    fn probe_budget_exhaustive_small_n() {
        for n in [1usize, 2, 3, 5, 17, 64] {
            for guess in 0..n {
                for target in 0..n {
                    let dist = (guess as f64 - target as f64).abs().max(2.0);
                    let budget = (2.0 * dist.log2() + 4.0) as u64;
                    let stats = run(n, guess, target);
                    assert!(
                        stats.probes <= budget,
                        "n={n} guess={guess} target={target}: {} > {budget}",
                        stats.probes
                    );
                }
            }
        }
    }
}
