//! Penalized piecewise-constant segmentation.
//!
//! Given a signal `P_1..P_n` and a per-segment penalty `C`, find the
//! piecewise-constant fit minimizing
//!
//! ```text
//! sum_i (P_i - F_i)^2 + C * (number of segments)
//! ```
//!
//! Several solvers share one signal representation:
//!
//! - [`solve_exact`]: the quadratic-time dynamic program, plus a pruned
//!   variant ([`solve_exact_pruned`]) that skips transitions spanning two
//!   points whose gap exceeds `2 * sqrt(2C)`.
//! - [`solve_bruteforce`]: exhaustive enumeration for tiny inputs.
//! - [`solve_additive`]: per-state value bisection driven by halfspace
//!   emptiness queries over lifted 4D points; `|value - OPT| <= epsilon`.
//! - [`solve_multiscale`]: splits transitions into geometric bands of
//!   segment length, each solved by an online Monge minimizer;
//!   `OPT <= value <= (1 + epsilon) * OPT`.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! `*64` aliases at the crate root are what most callers want.

pub mod additive;
pub mod cost;
mod error;
pub mod exact;
pub mod halfspace;
pub mod io;
pub mod monge;
pub mod multiscale;
mod result;
mod scalar;
pub mod signal;
mod solver;
pub mod synth;

pub use additive::{solve_additive, solve_additive_with, value_cap, AdditiveState};
pub use cost::{BigM, ExtendedCost};
pub use error::{InputError, SegError};
pub use exact::{
    exact_table, prune_window, solve_bruteforce, solve_exact, solve_exact_pruned, DPTable,
};
pub use halfspace::{Halfspace4, HalfspaceSet, KdForest, LinearScan, Point4, Witness};
pub use monge::{MongeEngine, MongeWeight};
pub use multiscale::{band_count, solve_multiscale, Band, BandedWeight};
pub use result::{segmentation_cost, SegmentationResult, SolverStats};
pub use scalar::Scalar;
pub use signal::{Signal, SolverConfig};
pub use solver::{solve, Algorithm, Backend};

pub type Result<T, E = SegError> = std::result::Result<T, E>;

pub type Signal64 = Signal<f64>;
pub type SolverConfig64 = SolverConfig<f64>;
pub type SegmentationResult64 = SegmentationResult<f64>;
pub type ExtendedCost64 = ExtendedCost<f64>;
pub type DPTable64 = DPTable<f64>;

pub type Signal32 = Signal<f32>;
pub type SolverConfig32 = SolverConfig<f32>;
pub type SegmentationResult32 = SegmentationResult<f32>;
