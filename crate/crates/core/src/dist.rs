//! Probability distributions over key positions.

use crate::error::{Error, Result};

/// Absolute tolerance on the total mass accepted by [`ProbDist::new`].
pub const MASS_TOLERANCE: f64 = 1e-9;

/// A probability vector over `n` key positions with cached prefix sums.
///
/// Construction renormalizes the input so the cached cdf ends at exactly 1
/// (up to one rounding step); inputs whose total is farther than
/// [`MASS_TOLERANCE`] from 1 are rejected by [`ProbDist::new`]. Use
/// [`ProbDist::from_weights`] for unnormalized non-negative weights.
#[derive(Debug, Clone)]
pub struct ProbDist {
    mass: Vec<f64>,
    cdf: Vec<f64>,
}

impl ProbDist {
    pub fn new(mass: Vec<f64>) -> Result<Self> {
        let total = Self::validate(&mass)?;
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidDistribution {
                reason: format!("total mass {total} not within {MASS_TOLERANCE} of 1"),
            });
        }
        Ok(Self::normalized(mass, total))
    }

    /// Normalizes arbitrary non-negative weights with positive total.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let total = Self::validate(&weights)?;
        if total <= 0.0 {
            return Err(Error::InvalidDistribution {
                reason: "total weight must be positive".to_string(),
            });
        }
        Ok(Self::normalized(weights, total))
    }

    /// Normalized histogram of event counts.
    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::from_weights(counts.iter().map(|&c| c as f64).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDistribution {
                reason: "uniform distribution needs n >= 1".to_string(),
            });
        }
        Self::from_weights(vec![1.0; n])
    }

    /// All mass on a single position.
    pub fn point_mass(n: usize, at: usize) -> Result<Self> {
        if at >= n {
            return Err(Error::PositionOutOfRange {
                position: at,
                len: n,
            });
        }
        let mut mass = vec![0.0; n];
        mass[at] = 1.0;
        Self::new(mass)
    }

    fn validate(mass: &[f64]) -> Result<f64> {
        if mass.is_empty() {
            return Err(Error::InvalidDistribution {
                reason: "empty mass vector".to_string(),
            });
        }
        let mut total = 0.0;
        for (i, &m) in mass.iter().enumerate() {
            if !m.is_finite() || m < 0.0 {
                return Err(Error::InvalidDistribution {
                    reason: format!("mass[{i}] = {m} is negative or non-finite"),
                });
            }
            total += m;
        }
        Ok(total)
    }

    fn normalized(mut mass: Vec<f64>, total: f64) -> Self {
        for m in &mut mass {
            *m /= total;
        }
        let mut cdf = Vec::with_capacity(mass.len());
        let mut acc = 0.0;
        for &m in &mass {
            acc += m;
            cdf.push(acc);
        }
        Self { mass, cdf }
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mass(&self, position: usize) -> f64 {
        self.mass[position]
    }

    pub fn masses(&self) -> &[f64] {
        &self.mass
    }

    /// Cumulative mass of positions `0..=position`.
    pub fn cdf(&self, position: usize) -> f64 {
        self.cdf[position]
    }

    pub fn cdf_slice(&self) -> &[f64] {
        &self.cdf
    }

    /// Total mass of positions `lo..=hi` (computed from the cached cdf, so
    /// it is exactly the quantity the search strategies bisect on).
    pub fn range_mass(&self, lo: usize, hi: usize) -> f64 {
        debug_assert!(lo <= hi && hi < self.len());
        let before = if lo == 0 { 0.0 } else { self.cdf[lo - 1] };
        self.cdf[hi] - before
    }

    /// Positions with strictly positive mass.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mass
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0.0)
            .map(|(i, _)| i)
    }

    /// Pointwise convex blend `lambda * self + (1 - lambda) * other`.
    pub fn blend(&self, other: &ProbDist, lambda: f64) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: format!("{lambda} not in [0, 1]"),
            });
        }
        // At the endpoints return the operand unchanged so downstream
        // searches replay it probe-for-probe.
        if lambda == 1.0 {
            return Ok(self.clone());
        }
        if lambda == 0.0 {
            return Ok(other.clone());
        }
        let mass = self
            .mass
            .iter()
            .zip(&other.mass)
            .map(|(&a, &b)| lambda * a + (1.0 - lambda) * b)
            .collect();
        Self::from_weights(mass)
    }
}
