//! Achievable-rate regions and random-coding simulation for two network
//! models whose cooperation resource may be absent: a physically degraded
//! broadcast channel whose decoders may conference over a rate-limited link,
//! and a multiple access channel whose second encoder may crib the first
//! encoder's channel input.
//!
//! The crate is organized bottom-up:
//!
//! * [`prob`] — finite-alphabet distributions and information measures,
//! * [`channels`] — channel models and factorized joint builders,
//! * [`regions`] — constraint sets, frontier extraction, sweeps, and the
//!   closed-form evaluators for the four worked example channels,
//! * [`sim`] — Monte-Carlo random-coding simulators for both models,
//! * [`checks`] — the cross-validation suites tying the pieces together,
//! * [`io`] — the channel-spec text format and CSV/SVG/JSON emitters.

pub mod channels;
pub mod checks;
pub mod io;
pub mod prob;
pub mod regions;
pub mod sim;

pub use channels::{DegradedBC, MacChannel};
pub use prob::{CondKernel, JointTable, ProbVector};
pub use regions::{ConstraintSet, RatePoint, RateRegion};
