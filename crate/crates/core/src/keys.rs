//! Sorted key arrays.

use crate::error::{Error, Result};

/// A strictly increasing array of signed 64-bit keys. Positions are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyArray {
    keys: Vec<i64>,
}

impl KeyArray {
    /// Builds a key array, rejecting empty input and any non-increasing pair.
    pub fn new(keys: Vec<i64>) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::InvalidKeys {
                reason: "need at least one key".to_string(),
            });
        }
        for (i, w) in keys.windows(2).enumerate() {
            if w[0] >= w[1] {
                return Err(Error::InvalidKeys {
                    reason: format!("keys[{}]={} >= keys[{}]={}", i, w[0], i + 1, w[1]),
                });
            }
        }
        Ok(Self { keys })
    }

    /// Keys `lo..hi` inclusive, one integer key per position.
    pub fn contiguous(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidKeys {
                reason: format!("contiguous range [{lo}, {hi}] is empty"),
            });
        }
        Ok(Self {
            keys: (lo..=hi).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees n >= 1
    }

    pub fn key(&self, position: usize) -> i64 {
        self.keys[position]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.keys
    }

    /// Position of the largest key <= `value`, or None if `value` is below
    /// the smallest key.
    pub fn predecessor(&self, value: i64) -> Option<usize> {
        let idx = self.keys.partition_point(|&k| k <= value);
        idx.checked_sub(1)
    }

    /// Position of `value` if it is a key.
    pub fn position_of(&self, value: i64) -> Option<usize> {
        self.keys.binary_search(&value).ok()
    }
}
