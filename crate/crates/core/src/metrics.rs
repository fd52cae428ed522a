//! Prediction-error metrics: entropy, earth mover's distance, and the
//! expected-probe bound they feed.

use crate::dist::ProbDist;
use crate::error::{Error, Result};

/// Entropy of `p` in bits. Zero-mass positions contribute 0.
pub fn entropy(p: &ProbDist) -> f64 {
    p.masses()
        .iter()
        .filter(|&&m| m > 0.0)
        .map(|&m| -m * m.log2())
        .sum()
}

/// Earth mover's distance between two distributions on the same positions,
/// with ground distance `|i - j|` in index units.
///
/// Uses the one-dimensional closed form: the L1 distance between the two
/// cdfs, summed over the `n - 1` interior cut points.
pub fn emd(p: &ProbDist, q: &ProbDist) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let n = p.len();
    let mut total = 0.0;
    for k in 0..n.saturating_sub(1) {
        total += (p.cdf(k) - q.cdf(k)).abs();
    }
    Ok(total)
}

/// Independent transport oracle for [`emd`]: a greedy two-pointer sweep that
/// moves mass between the leftmost unmatched positions of `p` and `q`.
/// Greedy matching is optimal on the line, so this must agree with the
/// closed form. Intended for modest `n`.
pub fn emd_bruteforce(p: &ProbDist, q: &ProbDist) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let n = p.len();
    let mut cost = 0.0;
    let mut i = 0;
    let mut j = 0;
    let mut rem_p = p.mass(0);
    let mut rem_q = q.mass(0);
    while i < n && j < n {
        let moved = rem_p.min(rem_q);
        cost += moved * (i as f64 - j as f64).abs();
        rem_p -= moved;
        rem_q -= moved;
        if rem_p <= 0.0 {
            i += 1;
            if i < n {
                rem_p = p.mass(i);
            }
        }
        if rem_q <= 0.0 {
            j += 1;
            if j < n {
                rem_q = q.mass(j);
            }
        }
    }
    Ok(cost)
}

/// The two quantities the expected-probe bound depends on.
#[derive(Debug, Clone, Copy)]
pub struct BoundInputs {
    /// Entropy of the true distribution, in bits.
    pub entropy_bits: f64,
    /// Earth mover's distance between truth and prediction, in positions.
    pub emd: f64,
}

impl BoundInputs {
    pub fn new(entropy_bits: f64, emd: f64) -> Result<Self> {
        if !entropy_bits.is_finite() || entropy_bits < 0.0 {
            return Err(Error::InvalidParameter {
                name: "entropy_bits",
                reason: format!("{entropy_bits} must be finite and non-negative"),
            });
        }
        if !emd.is_finite() || emd < 0.0 {
            return Err(Error::InvalidParameter {
                name: "emd",
                reason: format!("{emd} must be finite and non-negative"),
            });
        }
        Ok(Self { entropy_bits, emd })
    }
}

/// Upper bound on the expected probes of the interleaved search:
/// `4*H + 8*max(log2(emd) + 2, 1) + 8`.
///
/// For `emd = 0` the log term is -inf and the max clamps it to 1, so the
/// bound stays finite.
pub fn theorem1_bound(b: BoundInputs) -> f64 {
    let log_term = if b.emd > 0.0 {
        b.emd.log2() + 2.0
    } else {
        f64::NEG_INFINITY
    };
    4.0 * b.entropy_bits + 8.0 * log_term.max(1.0) + 8.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(mass: &[f64]) -> ProbDist {
        ProbDist::new(mass.to_vec()).unwrap()
    }

    #[test]
    fn entropy_uniform_point_and_two_atoms() {
        assert!((entropy(&ProbDist::uniform(4).unwrap()) - 2.0).abs() < 1e-12);
        assert_eq!(entropy(&ProbDist::point_mass(8, 3).unwrap()), 0.0);
        assert!((entropy(&dist(&[0.5, 0.5])) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn emd_point_masses_and_identity() {
        let p = ProbDist::point_mass(10, 0).unwrap();
        let q = ProbDist::point_mass(10, 7).unwrap();
        assert!((emd(&p, &q).unwrap() - 7.0).abs() < 1e-12);
        assert_eq!(emd(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn emd_mass_shift_examples() {
        // 0.1 mass moved from position 0 to position 1 vs to position 9.
        let mut base = vec![0.0; 10];
        base[0] = 1.0;
        let p = dist(&base);
        let mut near = vec![0.0; 10];
        near[0] = 0.9;
        near[1] = 0.1;
        let mut far = vec![0.0; 10];
        far[0] = 0.9;
        far[9] = 0.1;
        assert!((emd(&p, &dist(&near)).unwrap() - 0.1).abs() < 1e-12);
        assert!((emd(&p, &dist(&far)).unwrap() - 0.9).abs() < 1e-12);
    }

    #[test]
    fn emd_rejects_length_mismatch() {
        let p = ProbDist::uniform(3).unwrap();
        let q = ProbDist::uniform(4).unwrap();
        assert!(emd(&p, &q).is_err());
        assert!(emd_bruteforce(&p, &q).is_err());
    }

    #[test]
    fn bruteforce_matches_closed_form_on_fixed_cases() {
        let p = dist(&[0.2, 0.3, 0.5, 0.0]);
        let q = dist(&[0.0, 0.5, 0.25, 0.25]);
        let a = emd(&p, &q).unwrap();
        let b = emd_bruteforce(&p, &q).unwrap();
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn bound_plug_in_values() {
        let b = |h, e| theorem1_bound(BoundInputs::new(h, e).unwrap());
        assert!((b(0.0, 0.0) - 16.0).abs() < 1e-12);
        assert!((b(1.0, 0.0) - 20.0).abs() < 1e-12);
        assert!((b(0.0, 4.0) - 40.0).abs() < 1e-12);
    }

    #[test]
    fn bound_rejects_negative_inputs() {
        assert!(BoundInputs::new(-0.1, 0.0).is_err());
        assert!(BoundInputs::new(0.0, f64::NAN).is_err());
    }
}
