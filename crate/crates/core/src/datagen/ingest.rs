//! Temporal edge-list ingestion.
//!
//! Input is a plain-text file of `u v t` triples (source user, target user,
//! unix timestamp), one interaction per line. The source-user sequence,
//! ordered by timestamp, becomes the workload: an early prefix defines the
//! key set, a configurable slice of the predecessor-mapped remainder trains
//! the prediction, and the rest is the test trace.

use std::collections::BTreeSet;
use std::path::PathBuf;

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::keys::KeyArray;

#[derive(Debug, Clone)]
pub struct IngestConfig {
    /// Keep only this many earliest entries.
    pub max_entries: usize,
    /// Fraction of the sequence whose distinct sources become the keys.
    pub key_fraction: f64,
    /// Fraction of the mapped remainder used to build the prediction.
    pub train_fraction: f64,
    pub source: PathBuf,
}

impl IngestConfig {
    pub fn new(source: impl Into<PathBuf>, train_fraction: f64) -> Self {
        Self {
            max_entries: 1_000_000,
            key_fraction: 0.10,
            train_fraction,
            source: source.into(),
        }
    }
}

#[derive(Debug)]
pub struct IngestOutput {
    pub instance: Instance,
    /// Queries below the smallest key, removed before the split.
    pub dropped_queries: u64,
    pub entries: usize,
    pub train_len: usize,
    pub test_len: usize,
}

pub fn ingest_temporal(cfg: &IngestConfig) -> Result<IngestOutput> {
    if !(cfg.key_fraction > 0.0 && cfg.key_fraction < 1.0) {
        return Err(Error::InvalidParameter {
            name: "key_fraction",
            reason: format!("{} not in (0, 1)", cfg.key_fraction),
        });
    }
    if !(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0) {
        return Err(Error::InvalidParameter {
            name: "train_fraction",
            reason: format!("{} not in (0, 1)", cfg.train_fraction),
        });
    }
    if cfg.max_entries == 0 {
        return Err(Error::InvalidParameter {
            name: "max_entries",
            reason: "must be >= 1".to_string(),
        });
    }

    let text = std::fs::read_to_string(&cfg.source)?;
    let mut entries: Vec<(i64, i64)> = Vec::new(); // (timestamp, source)
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let source = parse_field(fields.next(), lineno + 1, "source user")?;
        let _target = parse_field(fields.next(), lineno + 1, "target user")?;
        let timestamp = parse_field(fields.next(), lineno + 1, "timestamp")?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: lineno + 1,
                reason: "expected exactly three fields".to_string(),
            });
        }
        entries.push((timestamp, source));
    }
    // Stable sort keeps equal timestamps in order of appearance.
    entries.sort_by_key(|&(t, _)| t);
    entries.truncate(cfg.max_entries);
    let sources: Vec<i64> = entries.iter().map(|&(_, s)| s).collect();

    let key_len = fraction_len(sources.len(), cfg.key_fraction);
    if key_len == 0 {
        return Err(Error::EmptyKeySet);
    }
    let distinct: BTreeSet<i64> = sources[..key_len].iter().copied().collect();
    let keys = KeyArray::new(distinct.into_iter().collect())?;

    let mut dropped = 0u64;
    let mapped: Vec<usize> = sources[key_len..]
        .iter()
        .filter_map(|&x| match keys.predecessor(x) {
            Some(pos) => Some(pos),
            None => {
                dropped += 1;
                None
            }
        })
        .collect();

    let train_len = fraction_len(mapped.len(), cfg.train_fraction);
    if train_len == 0 {
        return Err(Error::EmptySplit { which: "train" });
    }
    if train_len == mapped.len() {
        return Err(Error::EmptySplit { which: "test" });
    }
    let (train, test) = mapped.split_at(train_len);

    let histogram = |positions: &[usize]| {
        let mut counts = vec![0u64; keys.len()];
        for &pos in positions {
            counts[pos] += 1;
        }
        ProbDist::from_counts(&counts)
    };
    let prediction = histogram(train)?;
    let truth = histogram(test)?;

    let name = cfg
        .source
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "edges".to_string());
    let test_len = test.len();
    let instance = Instance::new(name, keys, truth, vec![prediction], Some(test.to_vec()))?;
    Ok(IngestOutput {
        instance,
        dropped_queries: dropped,
        entries: sources.len(),
        train_len,
        test_len,
    })
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<i64> {
    let raw = field.ok_or_else(|| Error::Parse {
        line,
        reason: format!("missing {what}"),
    })?;
    let value: i64 = raw.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("{what} `{raw}` is not an integer"),
    })?;
    if value < 0 {
        return Err(Error::Parse {
            line,
            reason: format!("{what} `{raw}` is negative"),
        });
    }
    Ok(value)
}

/// floor(len * fraction), guarded against representation dust so that e.g.
/// 20 * 0.10 counts exactly 2 lines.
fn fraction_len(len: usize, fraction: f64) -> usize {
    ((len as f64) * fraction + 1e-9).floor() as usize
}
