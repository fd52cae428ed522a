//! Search strategies over a probe session.
//!
//! Five algorithms share one contract: given a session whose hidden target
//! is present in the key array, drive probes until the target is found and
//! report exact probe counts. All strategies are deterministic in their
//! inputs, so replaying one yields an identical probe log.

mod bisection;
mod classic;
mod doubling;
mod learned;
mod portfolio;

pub use bisection::{bisection_search, convex_combination_search, weighted_median};
pub use classic::classic_search;
pub use doubling::doubling_point_search;
pub use learned::learned_search;
pub use portfolio::portfolio_search;

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::session::{SearchSession, SearchStats};

/// Parameters of the interleaved (learned) search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LearnedParams {
    growth_factor: u32,
}

impl LearnedParams {
    /// `growth_factor` scales the endpoint-phase reach exponent:
    /// `d = min(2^(growth_factor * 2^i), r - l)`. Must be >= 1.
    pub fn new(growth_factor: u32) -> Result<Self> {
        if growth_factor == 0 {
            return Err(Error::InvalidParameter {
                name: "growth_factor",
                reason: "must be >= 1".to_string(),
            });
        }
        Ok(Self { growth_factor })
    }

    /// The analysis default: reach `2^(2^i)`.
    pub fn theory() -> Self {
        Self { growth_factor: 1 }
    }

    /// The experiments default: reach `2^(8 * 2^i)`.
    pub fn experiment() -> Self {
        Self { growth_factor: 8 }
    }

    pub fn growth_factor(&self) -> u32 {
        self.growth_factor
    }
}

impl Default for LearnedParams {
    fn default() -> Self {
        Self::theory()
    }
}

/// Mixing weight for the convex-combination heuristic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexParams {
    lambda: f64,
}

impl ConvexParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: format!("{lambda} not in [0, 1]"),
            });
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

impl Default for ConvexParams {
    fn default() -> Self {
        Self { lambda: 0.5 }
    }
}

/// A strategy selection, not yet bound to an instance.
#[derive(Debug, Clone, PartialEq)]
pub enum StrategySpec {
    Classic,
    Bisection,
    ConvexCombination(ConvexParams),
    /// Doubling search from a fixed point guess; `None` derives the guess
    /// as the weighted median of the instance's prediction.
    DoublingFromPoint { guess: Option<usize> },
    Learned(LearnedParams),
    /// Multi-prediction search; endpoint phase uses the same params as
    /// the single-prediction interleaved search.
    Portfolio(LearnedParams),
}

impl StrategySpec {
    pub fn label(&self) -> &'static str {
        match self {
            StrategySpec::Classic => "classic",
            StrategySpec::Bisection => "bisection",
            StrategySpec::ConvexCombination(_) => "convex",
            StrategySpec::DoublingFromPoint { .. } => "doubling",
            StrategySpec::Learned(_) => "learned",
            StrategySpec::Portfolio(_) => "portfolio",
        }
    }

    /// Short parameter description for reporting ("c=8", "lambda=0.5", "").
    pub fn params_label(&self) -> String {
        match self {
            StrategySpec::Classic | StrategySpec::Bisection => String::new(),
            StrategySpec::ConvexCombination(p) => format!("lambda={}", p.lambda()),
            StrategySpec::DoublingFromPoint { guess: Some(g) } => format!("guess={g}"),
            StrategySpec::DoublingFromPoint { guess: None } => String::new(),
            StrategySpec::Learned(p) | StrategySpec::Portfolio(p) => {
                format!("c={}", p.growth_factor())
            }
        }
    }

    /// Resolves the strategy against an instance, precomputing anything that
    /// is shared across targets (blended distribution, derived point guess).
    pub fn bind<'a>(&self, instance: &'a Instance) -> Result<BoundStrategy<'a>> {
        let n = instance.n();
        let prepared = match self {
            StrategySpec::Classic => Prepared::Classic,
            StrategySpec::Bisection => Prepared::Bisection(instance.prediction()),
            StrategySpec::ConvexCombination(params) => {
                let uniform = ProbDist::uniform(n)?;
                Prepared::Convex(instance.prediction().blend(&uniform, params.lambda())?)
            }
            StrategySpec::DoublingFromPoint { guess } => {
                let point = match guess {
                    Some(g) if *g < n => *g,
                    Some(g) => {
                        return Err(Error::PositionOutOfRange {
                            position: *g,
                            len: n,
                        })
                    }
                    None => weighted_median(instance.prediction(), 0, n - 1)?,
                };
                Prepared::Doubling(point)
            }
            StrategySpec::Learned(params) => Prepared::Learned(instance.prediction(), *params),
            StrategySpec::Portfolio(params) => {
                Prepared::Portfolio(instance.predictions(), *params)
            }
        };
        Ok(BoundStrategy { instance, prepared })
    }
}

enum Prepared<'a> {
    Classic,
    Bisection(&'a ProbDist),
    Convex(ProbDist),
    Doubling(usize),
    Learned(&'a ProbDist, LearnedParams),
    Portfolio(&'a [ProbDist], LearnedParams),
}

/// A strategy resolved against one instance, ready to run per target.
pub struct BoundStrategy<'a> {
    instance: &'a Instance,
    prepared: Prepared<'a>,
}

impl BoundStrategy<'_> {
    /// Runs one search with a fresh session for the given target position.
    pub fn run(&self, target: usize) -> Result<SearchStats> {
        let mut session = SearchSession::new(self.instance.keys(), target)?;
        self.run_session(&mut session)
    }

    /// Runs against a caller-owned session (for probe-log inspection).
    pub fn run_session(&self, session: &mut SearchSession<'_>) -> Result<SearchStats> {
        match &self.prepared {
            Prepared::Classic => classic_search(session),
            Prepared::Bisection(pred) => bisection_search(session, pred),
            Prepared::Convex(blended) => bisection_search(session, blended),
            Prepared::Doubling(guess) => doubling_point_search(session, *guess),
            Prepared::Learned(pred, params) => learned_search(session, pred, params),
            Prepared::Portfolio(preds, params) => portfolio_search(session, preds, params),
        }
    }
}
