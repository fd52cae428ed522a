//! Benchmark instances: keys, a true distribution, and predictions.

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::keys::KeyArray;

/// One search problem: a key array, the true access distribution `p`, one or
/// more predicted distributions, and optionally an explicit query sequence
/// for trace-driven experiments.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    keys: KeyArray,
    truth: ProbDist,
    predictions: Vec<ProbDist>,
    queries: Option<Vec<usize>>,
}

impl Instance {
    pub fn new(
        name: impl Into<String>,
        keys: KeyArray,
        truth: ProbDist,
        predictions: Vec<ProbDist>,
        queries: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = keys.len();
        if truth.len() != n {
            return Err(Error::LengthMismatch {
                left: truth.len(),
                right: n,
            });
        }
        if predictions.is_empty() {
            return Err(Error::InvalidParameter {
                name: "predictions",
                reason: "need at least one prediction".to_string(),
            });
        }
        for pred in &predictions {
            if pred.len() != n {
                return Err(Error::LengthMismatch {
                    left: pred.len(),
                    right: n,
                });
            }
        }
        if let Some(qs) = &queries {
            for &q in qs {
                if q >= n {
                    return Err(Error::PositionOutOfRange {
                        position: q,
                        len: n,
                    });
                }
            }
        }
        Ok(Self {
            name: name.into(),
            keys,
            truth,
            predictions,
            queries,
        })
    }

    pub fn keys(&self) -> &KeyArray {
        &self.keys
    }

    pub fn n(&self) -> usize {
        self.keys.len()
    }

    /// The true access distribution `p`.
    pub fn truth(&self) -> &ProbDist {
        &self.truth
    }

    pub fn predictions(&self) -> &[ProbDist] {
        &self.predictions
    }

    /// The first (or only) prediction.
    pub fn prediction(&self) -> &ProbDist {
        &self.predictions[0]
    }

    pub fn queries(&self) -> Option<&[usize]> {
        self.queries.as_deref()
    }
}
