//! Searching a sorted array with a (possibly erroneous) predicted
//! probability distribution over target locations.
//!
//! The crate provides:
//!
//! - a probe-counting comparison oracle ([`SearchSession`]) that makes
//!   query complexity an exact, replayable measurement;
//! - five search strategies sharing one contract: classic midpoint search,
//!   weighted-median bisection, a convex-combination hedge, doubling search
//!   from a point guess, and the robust interleaved search (single
//!   prediction and portfolio variants);
//! - error metrics: entropy, earth mover's distance (closed form plus an
//!   independent transport oracle), and the expected-probe bound;
//! - exact expected-cost evaluation, bound audits, and an optimal binary
//!   search tree dynamic program as a lower-bound oracle;
//! - instance generators: Gaussian-shift synthetic data, adversarial
//!   families, and a temporal edge-list ingestion pipeline.

mod dist;
mod error;
mod instance;
mod keys;
mod session;

pub mod datagen;
pub mod evaluation;
pub mod metrics;
pub mod strategies;

pub use dist::{ProbDist, MASS_TOLERANCE};
pub use error::{Error, Result};
pub use instance::Instance;
pub use keys::KeyArray;
pub use session::{Outcome, SearchSession, SearchStats};
