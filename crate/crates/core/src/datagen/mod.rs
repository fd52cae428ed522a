//! Instance generators: synthetic Gaussian-shift data, adversarial
//! families, random audit pairs, and temporal edge-list ingestion.

mod ingest;
mod rng;

pub use ingest::{ingest_temporal, IngestConfig, IngestOutput};
pub use rng::{substream, substream_seed};

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::keys::KeyArray;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Gaussian-shift synthetic data: a dense integer keyspace, a predicted
/// distribution sampled around 0, and a true/test distribution sampled
/// around `shift`.
#[derive(Debug, Clone)]
pub struct SyntheticConfig {
    /// Inclusive keyspace bounds; every integer in between is a key.
    pub keyspace: (i64, i64),
    /// Samples drawn for each of the train and test histograms.
    pub sample_count: usize,
    pub sigma: f64,
    /// Mean of the test distribution; the train distribution stays at 0.
    pub shift: f64,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        Self {
            keyspace: (-100_000, 100_000),
            sample_count: 10_000,
            sigma: 10.0,
            shift: 0.0,
            seed: 0,
        }
    }
}

/// Draws train and test samples from independent substreams of the seed,
/// floors them to integers, clamps to the keyspace, and returns the
/// instance whose query sequence is the test sample trace.
///
/// Test samples reuse the same underlying standard-normal draws across
/// shift values (the shift is added afterwards), so sweeping the shift
/// varies exactly one thing.
pub fn synthetic_instance(cfg: &SyntheticConfig) -> Result<Instance> {
    let (lo, hi) = cfg.keyspace;
    if lo >= hi {
        return Err(Error::InvalidParameter {
            name: "keyspace",
            reason: format!("[{lo}, {hi}] must be a non-degenerate range"),
        });
    }
    if cfg.sample_count == 0 {
        return Err(Error::InvalidParameter {
            name: "sample_count",
            reason: "must be >= 1".to_string(),
        });
    }
    if !(cfg.sigma.is_finite() && cfg.sigma > 0.0) {
        return Err(Error::InvalidParameter {
            name: "sigma",
            reason: format!("{} must be positive", cfg.sigma),
        });
    }
    if !(cfg.shift.is_finite() && cfg.shift >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "shift",
            reason: format!("{} must be non-negative", cfg.shift),
        });
    }
    let keys = KeyArray::contiguous(lo, hi)?;
    let n = keys.len();

    let sample_positions = |rng: &mut ChaCha8Rng, mean: f64| -> Vec<usize> {
        (0..cfg.sample_count)
            .map(|_| {
                let z: f64 = StandardNormal.sample(rng);
                let value = (z * cfg.sigma + mean).floor();
                let clamped = value.clamp(lo as f64, hi as f64) as i64;
                (clamped - lo) as usize
            })
            .collect()
    };

    let mut train_rng = substream(cfg.seed, "train", 0);
    let train = sample_positions(&mut train_rng, 0.0);
    let mut counts = vec![0u64; n];
    for &pos in &train {
        counts[pos] += 1;
    }
    let prediction = ProbDist::from_counts(&counts)?;

    let mut test_rng = substream(cfg.seed, "test", 0);
    let queries = sample_positions(&mut test_rng, cfg.shift);
    let mut counts = vec![0u64; n];
    for &pos in &queries {
        counts[pos] += 1;
    }
    let truth = ProbDist::from_counts(&counts)?;

    Instance::new("synthetic", keys, truth, vec![prediction], Some(queries))
}

/// The hard instance for point extraction: two atoms of mass 1/2 at the
/// quarter and three-quarter positions, with a perfect prediction.
pub fn two_atom_instance(n: usize) -> Result<Instance> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: format!("{n} must be a positive multiple of 4"),
        });
    }
    let keys = KeyArray::contiguous(0, n as i64 - 1)?;
    let mut mass = vec![0.0; n];
    mass[n / 4 - 1] = 0.5;
    mass[3 * n / 4 - 1] = 0.5;
    let p = ProbDist::new(mass)?;
    Instance::new(format!("two-atom-{n}"), keys, p.clone(), vec![p], None)
}

/// The worst-case family for prediction error `eta`: instance `i` has a
/// point-mass truth at position `i` while every instance shares the uniform
/// prediction over the first `eta` positions.
pub fn lowerbound_family(eta: usize, n: usize) -> Result<Vec<Instance>> {
    if eta == 0 || eta > n {
        return Err(Error::InvalidParameter {
            name: "eta",
            reason: format!("need 1 <= eta <= n, got eta={eta} n={n}"),
        });
    }
    let keys = KeyArray::contiguous(0, n as i64 - 1)?;
    let mut uniform_mass = vec![0.0; n];
    for m in uniform_mass.iter_mut().take(eta) {
        *m = 1.0 / eta as f64;
    }
    let prediction = ProbDist::from_weights(uniform_mass)?;
    (0..eta)
        .map(|i| {
            Instance::new(
                format!("lowerbound-eta{eta}-i{}", i + 1),
                keys.clone(),
                ProbDist::point_mass(n, i)?,
                vec![prediction.clone()],
                None,
            )
        })
        .collect()
}

/// Random (truth, prediction) pairs drawn from a mixture of families:
/// dense random histograms, sparse atom sets, point masses, shifted copies,
/// and exact copies. Used by the bound audits.
pub fn random_audit_pair(rng: &mut ChaCha8Rng, n: usize) -> Result<(ProbDist, ProbDist)> {
    debug_assert!(n >= 1);
    let truth = match rng.gen_range(0..3) {
        0 => random_dense(rng, n)?,
        1 => random_sparse(rng, n)?,
        _ => ProbDist::point_mass(n, rng.gen_range(0..n))?,
    };
    let prediction = match rng.gen_range(0..5) {
        0 => truth.clone(),
        1 => shifted_copy(rng, &truth)?,
        2 => random_dense(rng, n)?,
        3 => random_sparse(rng, n)?,
        _ => ProbDist::uniform(n)?,
    };
    Ok((truth, prediction))
}

/// A portfolio instance with one prediction within earth mover's distance 1
/// of the truth and `m - 1` adversarial ones.
pub fn random_portfolio_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
) -> Result<Instance> {
    debug_assert!(n >= 1 && m >= 1);
    let keys = KeyArray::contiguous(0, n as i64 - 1)?;
    let truth = match rng.gen_range(0..3) {
        0 => random_dense(rng, n)?,
        1 => random_sparse(rng, n)?,
        _ => ProbDist::point_mass(n, rng.gen_range(0..n))?,
    };
    let good = nearby_copy(rng, &truth)?;
    let mut predictions = vec![good];
    while predictions.len() < m {
        let adversarial = match rng.gen_range(0..4) {
            0 => ProbDist::point_mass(n, rng.gen_range(0..n))?,
            1 => ProbDist::uniform(n)?,
            2 => mirrored_copy(&truth)?,
            _ => random_sparse(rng, n)?,
        };
        predictions.push(adversarial);
    }
    // The good prediction's place in the list must not matter.
    let swap_with = rng.gen_range(0..m);
    predictions.swap(0, swap_with);
    Instance::new(format!("portfolio-n{n}-m{m}"), keys, truth, predictions, None)
}

/// Dense exponential-weight histogram (full support).
fn random_dense(rng: &mut ChaCha8Rng, n: usize) -> Result<ProbDist> {
    let weights = (0..n)
        .map(|_| -(rng.gen_range(f64::MIN_POSITIVE..1.0)).ln())
        .collect();
    ProbDist::from_weights(weights)
}

/// Up to 32 random atoms with exponential weights.
fn random_sparse(rng: &mut ChaCha8Rng, n: usize) -> Result<ProbDist> {
    let atoms = rng.gen_range(1..=n.min(32));
    let mut weights = vec![0.0; n];
    for _ in 0..atoms {
        let at = rng.gen_range(0..n);
        weights[at] += -(rng.gen_range(f64::MIN_POSITIVE..1.0)).ln();
    }
    ProbDist::from_weights(weights)
}

/// The same histogram displaced by a random offset, boundary mass piling up
/// at the ends.
fn shifted_copy(rng: &mut ChaCha8Rng, p: &ProbDist) -> Result<ProbDist> {
    let n = p.len() as i64;
    let delta = rng.gen_range(-(n / 4 + 1)..=n / 4 + 1);
    let mut weights = vec![0.0; p.len()];
    for (i, &m) in p.masses().iter().enumerate() {
        let j = (i as i64 + delta).clamp(0, n - 1) as usize;
        weights[j] += m;
    }
    ProbDist::from_weights(weights)
}

/// Moves at most one unit of mass-distance: a fraction of one atom's mass
/// hops to an adjacent position, keeping the earth mover's distance <= 1.
fn nearby_copy(rng: &mut ChaCha8Rng, p: &ProbDist) -> Result<ProbDist> {
    let n = p.len();
    let mut weights = p.masses().to_vec();
    let support: Vec<usize> = p.support().collect();
    let from = support[rng.gen_range(0..support.len())];
    let to = if from + 1 < n && rng.gen_bool(0.5) {
        from + 1
    } else if from > 0 {
        from - 1
    } else {
        from
    };
    let moved = weights[from] * rng.gen_range(0.0..=1.0);
    weights[from] -= moved;
    weights[to] += moved;
    ProbDist::from_weights(weights)
}

/// Position-mirrored histogram.
fn mirrored_copy(p: &ProbDist) -> Result<ProbDist> {
    let mut weights = p.masses().to_vec();
    weights.reverse();
    ProbDist::from_weights(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{emd, entropy};

    #[test]
    fn two_atom_shape_and_metrics() {
        let inst = two_atom_instance(4).unwrap();
        assert!((inst.truth().mass(0) - 0.5).abs() < 1e-15);
        assert!((inst.truth().mass(2) - 0.5).abs() < 1e-15);
        let inst = two_atom_instance(1 << 10).unwrap();
        assert!((entropy(inst.truth()) - 1.0).abs() < 1e-12);
        assert_eq!(emd(inst.truth(), inst.prediction()).unwrap(), 0.0);
        assert!(two_atom_instance(6).is_err());
        assert!(two_atom_instance(0).is_err());
    }

    #[test]
    fn lowerbound_family_shape() {
        let family = lowerbound_family(4, 8).unwrap();
        assert_eq!(family.len(), 4);
        let first = &family[0];
        assert_eq!(entropy(first.truth()), 0.0);
        // Uniform over 4 positions against a point at 0: (0+1+2+3)/4.
        assert!((emd(first.truth(), first.prediction()).unwrap() - 1.5).abs() < 1e-12);
        let single = lowerbound_family(1, 8).unwrap();
        assert_eq!(emd(single[0].truth(), single[0].prediction()).unwrap(), 0.0);
        assert!(lowerbound_family(9, 8).is_err());
    }

    #[test]
    fn synthetic_is_deterministic_and_valid() {
        let cfg = SyntheticConfig {
            keyspace: (-2_000, 2_000),
            sample_count: 500,
            shift: 40.0,
            seed: 9,
            ..SyntheticConfig::default()
        };
        let a = synthetic_instance(&cfg).unwrap();
        let b = synthetic_instance(&cfg).unwrap();
        assert_eq!(a.queries().unwrap(), b.queries().unwrap());
        assert_eq!(a.truth().masses(), b.truth().masses());
        assert_eq!(a.prediction().masses(), b.prediction().masses());
        assert_eq!(a.n(), 4_001);
    }

    #[test]
    fn identical_streams_give_zero_emd() {
        // Two histograms built from the same substream coincide exactly.
        let draw = || {
            let mut rng = substream(4, "train", 0);
            let mut counts = vec![0u64; 64];
            for _ in 0..200 {
                counts[rng.gen_range(0..64)] += 1;
            }
            ProbDist::from_counts(&counts).unwrap()
        };
        assert_eq!(emd(&draw(), &draw()).unwrap(), 0.0);
    }

    #[test]
    fn synthetic_zero_shift_independent_streams_small_emd() {
        // Train and test draw from distinct substreams, so the error is
        // positive but stays at sampling-noise scale.
        let cfg = SyntheticConfig {
            keyspace: (-1_000, 1_000),
            sample_count: 300,
            seed: 4,
            ..SyntheticConfig::default()
        };
        let inst = synthetic_instance(&cfg).unwrap();
        let e = emd(inst.truth(), inst.prediction()).unwrap();
        assert!(e > 0.0 && e < 2.0, "emd={e}");
    }

    #[test]
    fn synthetic_large_shift_separates_supports() {
        let cfg = SyntheticConfig {
            keyspace: (-1_000, 1_000),
            sample_count: 500,
            shift: 100.0,
            seed: 11,
            ..SyntheticConfig::default()
        };
        let inst = synthetic_instance(&cfg).unwrap();
        let last_pred = inst.prediction().support().max().unwrap();
        let first_truth = inst.truth().support().min().unwrap();
        assert!(last_pred < first_truth, "{last_pred} vs {first_truth}");
    }

    #[test]
    fn audit_pairs_are_valid_distributions() {
        let mut rng = substream(3, "audit", 0);
        for _ in 0..50 {
            let n = rng.gen_range(1..200usize);
            let (p, q) = random_audit_pair(&mut rng, n).unwrap();
            assert_eq!(p.len(), n);
            assert_eq!(q.len(), n);
            assert!((p.cdf(n - 1) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn portfolio_instance_has_one_nearby_prediction() {
        let mut rng = substream(5, "portfolio", 0);
        for _ in 0..30 {
            let n = rng.gen_range(2..300usize);
            let m = [2, 4, 8][rng.gen_range(0..3)];
            let inst = random_portfolio_instance(&mut rng, n, m).unwrap();
            assert_eq!(inst.predictions().len(), m);
            let best = inst
                .predictions()
                .iter()
                .map(|q| emd(inst.truth(), q).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!(best <= 1.0 + 1e-9, "best emd {best}");
        }
    }
}
