use std::fmt;
use std::str::FromStr;

use crate::{
    solve_additive_with, solve_bruteforce, solve_exact, solve_exact_pruned, solve_multiscale,
    KdForest, LinearScan, Result, Scalar, SegmentationResult, Signal, SolverConfig,
};

/// Solver selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exact,
    ExactPruned,
    Brute,
    /// Multiplicative `(1 + epsilon)` approximation.
    Monge,
    /// Additive `epsilon` approximation.
    Halfspace,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Exact,
        Algorithm::ExactPruned,
        Algorithm::Brute,
        Algorithm::Monge,
        Algorithm::Halfspace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::ExactPruned => "exact-pruned",
            Algorithm::Brute => "brute",
            Algorithm::Monge => "monge",
            Algorithm::Halfspace => "halfspace",
        }
    }

    pub fn is_approximate(self) -> bool {
        matches!(self, Algorithm::Monge | Algorithm::Halfspace)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// Halfspace backend for [`Algorithm::Halfspace`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Backend {
    #[default]
    Linear,
    KdTree,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Linear => "linear",
            Backend::KdTree => "kdtree",
        }
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(Backend::Linear),
            "kdtree" => Ok(Backend::KdTree),
            _ => Err(format!("unknown backend {s:?}")),
        }
    }
}

/// Runs the selected solver.
pub fn solve<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    algorithm: Algorithm,
    backend: Backend,
) -> Result<SegmentationResult<T>> {
    match algorithm {
        Algorithm::Exact => solve_exact(sig, cfg),
        Algorithm::ExactPruned => solve_exact_pruned(sig, cfg),
        Algorithm::Brute => solve_bruteforce(sig, cfg),
        Algorithm::Monge => solve_multiscale(sig, cfg),
        Algorithm::Halfspace => match backend {
            Backend::Linear => solve_additive_with(sig, cfg, LinearScan::new()).map(|r| r.0),
            Backend::KdTree => solve_additive_with(sig, cfg, KdForest::new()).map(|r| r.0),
        },
    }
}
