//! CLI-level acceptance: the qualitative shift-sweep reproduction, CSV
//! determinism, and the ingestion golden file. Each criterion prints one
//! PASS/FAIL line (visible with `cargo test -- --nocapture`).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

fn report(name: &str, pass: bool) {
    println!("[acceptance] {} — {}", if pass { "PASS" } else { "FAIL" }, name);
    assert!(pass, "acceptance criterion failed: {name}");
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_distsearch"))
}

/// Criterion 6: qualitative reproduction of the synthetic shift sweep with
/// fixed seeds — at zero shift bisection <= learned(c=8) <= classic; from
/// shift 60 the interleaved search beats bisection; at shift 100 it stays
/// within 1.5x classic.
#[test]
fn criterion_6_shift_sweep_ordering() {
    use distsearch_cli_tests::*;
    let rows = synth_rows(&SynthSettings {
        shifts: vec![0.0, 60.0, 100.0],
        trials: 5,
        strategies: "classic,bisection,learned",
        growth_factor: 8,
        seed: 42,
        jobs: 4,
        samples: 10_000,
    });
    // Mean avg_cost per (strategy, shift) across trials.
    let mut groups: BTreeMap<(String, i64), Vec<f64>> = BTreeMap::new();
    for row in &rows {
        groups
            .entry((row.strategy.clone(), row.x_value as i64))
            .or_default()
            .push(row.avg_cost);
    }
    let mean = |strategy: &str, shift: i64| -> f64 {
        let values = &groups[&(strategy.to_string(), shift)];
        values.iter().sum::<f64>() / values.len() as f64
    };
    let ok = mean("bisection", 0) <= mean("learned", 0)
        && mean("learned", 0) <= mean("classic", 0)
        && mean("learned", 60) < mean("bisection", 60)
        && mean("learned", 100) < mean("bisection", 100)
        && mean("learned", 100) <= 1.5 * mean("classic", 100);
    report(
        &format!(
            "criterion 6: shift-sweep ordering — shift 0: {:.2} <= {:.2} <= {:.2}; \
             shift 60: learned {:.2} < bisection {:.2}; shift 100: learned {:.2} \
             <= 1.5 * classic {:.2}",
            mean("bisection", 0),
            mean("learned", 0),
            mean("classic", 0),
            mean("learned", 60),
            mean("bisection", 60),
            mean("learned", 100),
            mean("classic", 100),
        ),
        ok,
    );
}

/// Criterion 8: identical flags give byte-identical CSV, and the output is
/// independent of the parallelism level.
#[test]
fn criterion_8_csv_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |out: &Path, jobs: &str| {
        let status = binary()
            .args([
                "synth",
                "--shifts",
                "0,100",
                "--trials",
                "2",
                "--strategies",
                "classic,bisection,convex,learned,doubling,portfolio",
                "--samples",
                "2000",
                "--seed",
                "9",
                "--jobs",
                jobs,
                "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(out).unwrap()
    };
    let first = run(&dir.path().join("a.csv"), "1");
    let second = run(&dir.path().join("b.csv"), "1");
    let parallel = run(&dir.path().join("c.csv"), "8");
    report(
        "criterion 8: synth CSV byte-identical across reruns and --jobs 1 vs 8",
        first == second && first == parallel,
    );
}

/// Criterion 9 (golden half): the committed fixture reproduces the golden
/// CSV byte for byte through the real-data command.
#[test]
fn criterion_9_ingestion_golden_csv() {
    let root = workspace_root();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("real.csv");
    let status = binary()
        .args([
            "real",
            "--fixture",
            root.join("data/fixtures/edges_small.txt").to_str().unwrap(),
            "--train-fracs",
            "0.1,0.25,0.5",
            "--strategies",
            "classic,bisection,convex,learned,doubling,portfolio",
            "--growth-factor",
            "8",
            "--lambda",
            "0.5",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let produced = std::fs::read(&out).unwrap();
    let golden = std::fs::read(root.join("data/fixtures/golden_real.csv")).unwrap();
    report(
        "criterion 9: fixture run matches the committed golden CSV byte-for-byte",
        produced == golden,
    );
}

/// The sweep fixture's prediction error shrinks (never grows) as the train
/// fraction increases.
#[test]
fn sweep_fixture_error_non_increasing() {
    use distsearch_cli_tests::*;
    let root = workspace_root();
    let fractions: Vec<f64> = (1..=10).map(|k| k as f64 * 0.05).collect();
    let emds = real_emds(
        &root.join("data/fixtures/edges_sweep.txt"),
        &fractions,
    );
    let ok = emds.windows(2).all(|w| w[1] <= w[0] + 1e-12)
        && (emds[0] - 0.5).abs() < 1e-9
        && (emds[9] - 0.05).abs() < 1e-9;
    report(
        &format!("sweep fixture: emd non-increasing over train fractions ({emds:.3?})"),
        ok,
    );
}

/// Optional full-scale check: only runs when a SNAP dataset has been
/// downloaded into data/. Mirrors the reported ordering at t = 50%.
#[test]
fn optional_full_scale_real_data() {
    use distsearch_cli_tests::*;
    let root = workspace_root();
    let candidates = [
        root.join("data/sx-askubuntu-a2q.txt"),
        root.join("data/sx-superuser-a2q.txt"),
    ];
    let mut checked = 0;
    for path in candidates.iter().filter(|p| p.exists()) {
        let rows = real_rows(path, &[0.5]);
        let cost = |strategy: &str| {
            rows.iter()
                .find(|r| r.strategy == strategy)
                .map(|r| r.avg_cost)
                .unwrap()
        };
        let ok = cost("learned") <= cost("classic")
            && cost("learned") <= 1.15 * cost("bisection");
        report(
            &format!(
                "optional: {} at t=0.5 — learned {:.2}, bisection {:.2}, classic {:.2}",
                path.file_stem().unwrap().to_string_lossy(),
                cost("learned"),
                cost("bisection"),
                cost("classic"),
            ),
            ok,
        );
        checked += 1;
    }
    if checked == 0 {
        println!(
            "[acceptance] SKIP — optional full-scale check (no SNAP dataset under data/; \
             fetch one with `distsearch real --download askubuntu ...`)"
        );
    }
}

/// Shared helpers for driving the experiment code from the tests.
mod distsearch_cli_tests {
    use std::path::Path;

    pub struct SynthSettings {
        pub shifts: Vec<f64>,
        pub trials: u32,
        pub strategies: &'static str,
        pub growth_factor: u32,
        pub seed: u64,
        pub jobs: usize,
        pub samples: usize,
    }

    pub struct Row {
        pub strategy: String,
        pub x_value: f64,
        pub avg_cost: f64,
        pub emd: f64,
    }

    fn run_binary_csv(args: &[&str]) -> Vec<Row> {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("rows.csv");
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_distsearch"))
            .args(args)
            .arg("--out")
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success(), "command failed: {args:?}");
        let text = std::fs::read_to_string(&out).unwrap();
        text.lines()
            .skip(1)
            .map(|line| {
                let fields: Vec<&str> = line.split(',').collect();
                Row {
                    strategy: fields[1].to_string(),
                    x_value: fields[4].parse().unwrap(),
                    avg_cost: fields[8].parse().unwrap(),
                    emd: fields[7].parse().unwrap(),
                }
            })
            .collect()
    }

    pub fn synth_rows(settings: &SynthSettings) -> Vec<Row> {
        let shifts = settings
            .shifts
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        run_binary_csv(&[
            "synth",
            "--shifts",
            &shifts,
            "--trials",
            &settings.trials.to_string(),
            "--strategies",
            settings.strategies,
            "--growth-factor",
            &settings.growth_factor.to_string(),
            "--seed",
            &settings.seed.to_string(),
            "--jobs",
            &settings.jobs.to_string(),
            "--samples",
            &settings.samples.to_string(),
        ])
    }

    pub fn real_rows(source: &Path, fractions: &[f64]) -> Vec<Row> {
        let fracs = fractions
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(",");
        run_binary_csv(&[
            "real",
            "--source",
            source.to_str().unwrap(),
            "--train-fracs",
            &fracs,
            "--strategies",
            "classic,bisection,learned",
            "--growth-factor",
            "8",
            "--jobs",
            "2",
        ])
    }

    /// One emd per fraction, in fraction order.
    pub fn real_emds(source: &Path, fractions: &[f64]) -> Vec<f64> {
        let rows = real_rows(source, fractions);
        fractions
            .iter()
            .map(|&f| {
                rows.iter()
                    .find(|r| (r.x_value - f).abs() < 1e-12)
                    .map(|r| r.emd)
                    .unwrap()
            })
            .collect()
    }
}
