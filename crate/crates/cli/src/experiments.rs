//! The two experiment drivers: a synthetic shift sweep and a train-fraction
//! sweep over an ingested temporal workload.

use std::collections::HashMap;
use std::path::PathBuf;

use distsearch::datagen::{ingest_temporal, substream_seed, synthetic_instance};
use distsearch::datagen::{IngestConfig, SyntheticConfig};
use distsearch::metrics::{emd, entropy};
use distsearch::strategies::{BoundStrategy, StrategySpec};
use distsearch::{Error, Instance, Result};

use crate::csv::{fill_trial_std, sort_rows, ResultRow};
use crate::pool::parallel_map;

#[derive(Debug, Clone)]
pub struct SynthOptions {
    pub shifts: Vec<f64>,
    pub trials: u32,
    pub strategies: Vec<StrategySpec>,
    pub seed: u64,
    pub jobs: usize,
    pub samples: usize,
    pub sigma: f64,
    pub keyspace: (i64, i64),
}

/// One row per (shift, trial, strategy). `avg_cost` averages the probe
/// count over the trial's test query trace; `std_cost` is the deviation of
/// those averages across trials of the same (strategy, shift) group.
pub fn run_synth(opts: &SynthOptions) -> Result<Vec<ResultRow>> {
    let mut cells = Vec::new();
    for &shift in &opts.shifts {
        for trial in 0..opts.trials {
            cells.push((shift, trial));
        }
    }
    let results = parallel_map(&cells, opts.jobs, |&(shift, trial)| -> Result<Vec<ResultRow>> {
        let cfg = SyntheticConfig {
            keyspace: opts.keyspace,
            sample_count: opts.samples,
            sigma: opts.sigma,
            shift,
            // Keyed by trial only: the same trial reuses its train draw
            // across the whole shift sweep.
            seed: substream_seed(opts.seed, "synth-trial", trial as u64),
        };
        let instance = synthetic_instance(&cfg)?;
        let entropy_bits = entropy(instance.truth());
        let emd_value = emd(instance.truth(), instance.prediction())?;
        opts.strategies
            .iter()
            .map(|spec| {
                let (avg, _, params) = strategy_trace_cost(spec, &instance)?;
                Ok(ResultRow {
                    dataset: "synthetic".to_string(),
                    strategy: spec.label().to_string(),
                    params,
                    trial,
                    x_value: shift,
                    n: instance.n(),
                    entropy_bits,
                    emd: emd_value,
                    avg_cost: avg,
                    std_cost: 0.0,
                    dropped_queries: 0,
                })
            })
            .collect()
    });
    let mut rows = Vec::new();
    for cell in results {
        rows.extend(cell?);
    }
    sort_rows(&mut rows);
    fill_trial_std(&mut rows);
    Ok(rows)
}

#[derive(Debug, Clone)]
pub struct RealOptions {
    pub source: PathBuf,
    pub fractions: Vec<f64>,
    pub strategies: Vec<StrategySpec>,
    pub jobs: usize,
    pub max_entries: usize,
    pub key_fraction: f64,
}

pub struct RealRun {
    pub rows: Vec<ResultRow>,
    /// One line per fraction with the measured error, for error-axis plots.
    pub fraction_log: Vec<String>,
}

/// One row per (train fraction, strategy); `std_cost` is the per-query
/// deviation within the test trace.
pub fn run_real(opts: &RealOptions) -> Result<RealRun> {
    let results = parallel_map(&opts.fractions, opts.jobs, |&fraction| {
        real_fraction_cell(opts, fraction)
    });
    let mut rows = Vec::new();
    let mut fraction_log = Vec::new();
    for cell in results {
        let (cell_rows, log_line) = cell?;
        rows.extend(cell_rows);
        fraction_log.push(log_line);
    }
    sort_rows(&mut rows);
    Ok(RealRun { rows, fraction_log })
}

fn real_fraction_cell(
    opts: &RealOptions,
    fraction: f64,
) -> Result<(Vec<ResultRow>, String)> {
    let out = ingest_temporal(&IngestConfig {
        max_entries: opts.max_entries,
        key_fraction: opts.key_fraction,
        train_fraction: fraction,
        source: opts.source.clone(),
    })?;
    let instance = &out.instance;
    let entropy_bits = entropy(instance.truth());
    let emd_value = emd(instance.truth(), instance.prediction())?;
    let log_line = format!(
        "# dataset={} fraction={} emd={:.6} log2_emd={:.6}",
        instance.name,
        fraction,
        emd_value,
        emd_value.log2()
    );
    let rows = opts
        .strategies
        .iter()
        .map(|spec| {
            let (avg, std, params) = strategy_trace_cost(spec, instance)?;
            Ok(ResultRow {
                dataset: instance.name.clone(),
                strategy: spec.label().to_string(),
                params,
                trial: 0,
                x_value: fraction,
                n: instance.n(),
                entropy_bits,
                emd: emd_value,
                avg_cost: avg,
                std_cost: std,
                dropped_queries: out.dropped_queries,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows, log_line))
}

/// Average and population deviation of the probe count over the instance's
/// query trace. Search outcomes are memoized per position (strategies are
/// deterministic, so repeated queries cost the same). A strategy that
/// errors mid-trace reports NaN costs with the error tagged in its params.
fn strategy_trace_cost(
    spec: &StrategySpec,
    instance: &Instance,
) -> Result<(f64, f64, String)> {
    let queries = instance.queries().ok_or(Error::InvalidParameter {
        name: "queries",
        reason: "instance has no query trace".to_string(),
    })?;
    let bound = spec.bind(instance)?;
    match trace_moments(&bound, queries) {
        Ok((avg, std)) => Ok((avg, std, spec.params_label())),
        Err(Error::NotFound) => {
            let mut params = spec.params_label();
            if !params.is_empty() {
                params.push(';');
            }
            params.push_str("error=not-found");
            Ok((f64::NAN, f64::NAN, params))
        }
        Err(other) => Err(other),
    }
}

fn trace_moments(bound: &BoundStrategy<'_>, queries: &[usize]) -> Result<(f64, f64)> {
    let mut cache: HashMap<usize, u64> = HashMap::new();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for &q in queries {
        let probes = match cache.get(&q) {
            Some(&c) => c,
            None => {
                let c = bound.run(q)?.probes;
                cache.insert(q, c);
                c
            }
        };
        sum += probes as f64;
        sum_sq += (probes * probes) as f64;
    }
    let len = queries.len() as f64;
    let mean = sum / len;
    let var = (sum_sq / len - mean * mean).max(0.0);
    Ok((mean, var.sqrt()))
}

/// Parses the CLI's comma-separated strategy list.
pub fn parse_strategies(
    list: &str,
    growth_factor: u32,
    lambda: f64,
) -> Result<Vec<StrategySpec>> {
    use distsearch::strategies::{ConvexParams, LearnedParams};
    let params = LearnedParams::new(growth_factor)?;
    let convex = ConvexParams::new(lambda)?;
    list.split(',')
        .map(|name| match name.trim() {
            "classic" => Ok(StrategySpec::Classic),
            "bisection" => Ok(StrategySpec::Bisection),
            "convex" => Ok(StrategySpec::ConvexCombination(convex)),
            "doubling" => Ok(StrategySpec::DoublingFromPoint { guess: None }),
            "learned" => Ok(StrategySpec::Learned(params)),
            "portfolio" => Ok(StrategySpec::Portfolio(params)),
            other => Err(Error::InvalidParameter {
                name: "strategies",
                reason: format!(
                    "unknown strategy `{other}` (expected classic, bisection, \
                     convex, learned, doubling, portfolio)"
                ),
            }),
        })
        .collect()
}
