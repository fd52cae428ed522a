//! The probe-counting comparison oracle.
//!
//! A [`SearchSession`] binds a hidden target position to a key array and is
//! the sole channel through which strategies may compare against the array.
//! Every three-way probe costs exactly 1 and is recorded in order, so a
//! finished session can replay and audit the strategy that drove it.

use crate::error::{Error, Result};
use crate::keys::KeyArray;

/// Result of comparing the hidden target key to the key at a probed position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// target < keys[i]
    Less,
    /// target = keys[i]
    Equal,
    /// target > keys[i]
    Greater,
}

/// Outcome of running one strategy to completion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchStats {
    /// Position where the target was found (equals the hidden position).
    pub found: usize,
    /// Total number of probes spent.
    pub probes: u64,
    /// Outer iterations used; 0 for single-phase strategies.
    pub iterations: u32,
    /// (bisection-phase probes, endpoint-phase probes); (0, 0) for
    /// single-phase strategies.
    pub phase_probes: (u64, u64),
}

impl SearchStats {
    pub(crate) fn single_phase(found: usize, probes: u64) -> Self {
        SearchStats {
            found,
            probes,
            iterations: 0,
            phase_probes: (0, 0),
        }
    }
}

/// Single-search mutable state: one hidden target, one probe counter.
#[derive(Debug)]
pub struct SearchSession<'a> {
    keys: &'a KeyArray,
    target: usize,
    probes: u64,
    log: Vec<(usize, Outcome)>,
}

impl<'a> SearchSession<'a> {
    pub fn new(keys: &'a KeyArray, target: usize) -> Result<Self> {
        if target >= keys.len() {
            return Err(Error::PositionOutOfRange {
                position: target,
                len: keys.len(),
            });
        }
        Ok(Self {
            keys,
            target,
            probes: 0,
            log: Vec::new(),
        })
    }

    pub fn keys(&self) -> &KeyArray {
        self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Compares the hidden target against `keys[position]`. Costs 1.
    pub fn probe(&mut self, position: usize) -> Result<Outcome> {
        if position >= self.keys.len() {
            return Err(Error::PositionOutOfRange {
                position,
                len: self.keys.len(),
            });
        }
        self.probes += 1;
        let outcome = match self
            .keys
            .key(self.target)
            .cmp(&self.keys.key(position))
        {
            std::cmp::Ordering::Less => Outcome::Less,
            std::cmp::Ordering::Equal => Outcome::Equal,
            std::cmp::Ordering::Greater => Outcome::Greater,
        };
        self.log.push((position, outcome));
        Ok(outcome)
    }

    pub fn probe_count(&self) -> u64 {
        self.probes
    }

    /// Ordered (position, outcome) pairs of every probe so far.
    pub fn probe_log(&self) -> &[(usize, Outcome)] {
        &self.log
    }

    /// Checks the recorded log against the session's own target: outcomes
    /// must match a fixed target, and the target must stay inside the range
    /// implied by all previous outcomes.
    pub fn verify_range_invariant(&self) -> bool {
        let mut lo = 0usize;
        let mut hi = self.keys.len() - 1;
        for &(pos, outcome) in &self.log {
            if self.target < lo || self.target > hi {
                return false;
            }
            let expected = match self.keys.key(self.target).cmp(&self.keys.key(pos)) {
                std::cmp::Ordering::Less => Outcome::Less,
                std::cmp::Ordering::Equal => Outcome::Equal,
                std::cmp::Ordering::Greater => Outcome::Greater,
            };
            if outcome != expected {
                return false;
            }
            match outcome {
                Outcome::Less => {
                    if pos == 0 {
                        return false;
                    }
                    hi = hi.min(pos - 1);
                }
                Outcome::Greater => lo = lo.max(pos + 1),
                Outcome::Equal => {}
            }
            if lo > hi {
                // Range may only empty on the final (Equal) probe.
                return outcome == Outcome::Equal;
            }
        }
        self.target >= lo && self.target <= hi
    }

    /// The hidden position. Strategies must not consult this; it exists for
    /// evaluation and tests.
    pub fn hidden_target(&self) -> usize {
        self.target
    }
}
