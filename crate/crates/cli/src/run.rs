use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use pcseg::synth::{gen_signal, StepSpec};
use pcseg::{io, solve, Algorithm, Backend, Signal64, SolverConfig64, SolverStats};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

/// Generator description, written `segments=4,length=1000,jump=5,noise=1`.
///
/// `jump` defaults to 5 and `noise` to 1; `seed` may be given here or by
/// the caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub segments: usize,
    pub length: usize,
    pub jump: f64,
    pub noise: f64,
    pub seed: Option<u64>,
}

impl GenSpec {
    pub fn to_step_spec(self, default_seed: u64) -> StepSpec {
        StepSpec {
            segments: self.segments,
            length: self.length,
            jump: self.jump,
            noise: self.noise,
            seed: self.seed.unwrap_or(default_seed),
        }
    }
}

impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (mut segments, mut length, mut seed) = (None, None, None);
        let (mut jump, mut noise) = (5.0, 1.0);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let bad = |e: &dyn std::fmt::Display| format!("{key}: {e}");
            match key.trim() {
                "segments" => segments = Some(value.trim().parse().map_err(|e| bad(&e))?),
                "length" | "n" => length = Some(value.trim().parse().map_err(|e| bad(&e))?),
                "jump" => jump = value.trim().parse().map_err(|e| bad(&e))?,
                "noise" => noise = value.trim().parse().map_err(|e| bad(&e))?,
                "seed" => seed = Some(value.trim().parse().map_err(|e| bad(&e))?),
                other => return Err(format!("unknown generator key {other:?}")),
            }
        }
        Ok(GenSpec {
            segments: segments.ok_or("missing segments=")?,
            length: length.ok_or("missing length=")?,
            jump,
            noise,
            seed,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    Gen(GenSpec),
}

/// One `fit` invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub source: Source,
    pub algorithm: Algorithm,
    pub backend: Backend,
    pub penalty: f64,
    pub epsilon: Option<f64>,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

impl RunSpec {
    pub fn new(source: Source, algorithm: Algorithm, penalty: f64) -> Self {
        Self {
            source,
            algorithm,
            backend: Backend::default(),
            penalty,
            epsilon: None,
            seed: 0,
            output: None,
        }
    }

    /// Parameter checks that do not need the input.
    pub fn validate(&self) -> Result<SolverConfig64, CliError> {
        if self.algorithm.is_approximate() && self.epsilon.is_none() {
            return Err(CliError::Config(format!(
                "--epsilon is required for {}",
                self.algorithm
            )));
        }
        let cfg = match self.epsilon {
            Some(eps) => SolverConfig64::with_epsilon(self.penalty, eps)?,
            None => SolverConfig64::new(self.penalty)?,
        };
        if self.algorithm == Algorithm::Monge && self.penalty <= 0.0 {
            return Err(CliError::Solver(pcseg::SegError::PenaltyNotPositive));
        }
        Ok(cfg)
    }

    pub fn load(&self) -> Result<(Signal64, String), CliError> {
        match &self.source {
            Source::File(path) => Ok((io::read_signal(path)?, format!("file:{}", path.display()))),
            Source::Gen(g) => {
                let spec = g.to_step_spec(self.seed);
                let sig = gen_signal(&spec)?.signal;
                let desc = format!(
                    "gen:segments={},length={},jump={},noise={},seed={}",
                    spec.segments, spec.length, spec.jump, spec.noise, spec.seed
                );
                Ok((sig, desc))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub algorithm: String,
    pub backend: Option<String>,
    pub penalty: f64,
    pub epsilon: Option<f64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub source: String,
    pub length: usize,
    /// SHA-256 of the values as little-endian f64 bytes.
    pub sha256: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub transitions: u64,
    pub queries: u64,
    pub oracle_evals: u64,
}

impl From<SolverStats> for Counters {
    fn from(s: SolverStats) -> Self {
        Self {
            transitions: s.transitions,
            queries: s.queries,
            oracle_evals: s.oracle_evals,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultBody {
    pub value: f64,
    pub segments: usize,
    pub boundaries: Vec<usize>,
    pub levels: Vec<f64>,
    pub stats: Counters,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: f64,
}

/// Everything `fit` reports. Field order is fixed; only `timing` varies
/// between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub solver: String,
    pub config: ConfigEcho,
    pub input: InputDigest,
    pub result: ResultBody,
    pub timing: Timing,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn digest(sig: &Signal64) -> String {
    let mut h = Sha256::new();
    for v in sig.values() {
        h.update(v.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Loads the input, runs the solver and builds the report. Does not write
/// anything.
pub fn run(spec: &RunSpec) -> Result<RunReport, CliError> {
    let cfg = spec.validate()?;
    let (sig, source) = spec.load()?;
    let start = Instant::now();
    let r = solve(&sig, &cfg, spec.algorithm, spec.backend)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(RunReport {
        solver: r.solver_name.to_string(),
        config: ConfigEcho {
            algorithm: spec.algorithm.name().to_string(),
            backend: (spec.algorithm == Algorithm::Halfspace)
                .then(|| spec.backend.name().to_string()),
            penalty: spec.penalty,
            epsilon: spec.epsilon,
            seed: spec.seed,
        },
        input: InputDigest {
            source,
            length: sig.len(),
            sha256: digest(&sig),
        },
        result: ResultBody {
            value: r.value,
            segments: r.segments(),
            boundaries: r.boundaries,
            levels: r.levels,
            stats: r.stats.into(),
        },
        timing: Timing { wall_ms },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_spec_parsing() {
        let g: GenSpec = "segments=3, length=90,jump=2.5,seed=7".parse().unwrap();
        assert_eq!(
            g,
            GenSpec {
                segments: 3,
                length: 90,
                jump: 2.5,
                noise: 1.0,
                seed: Some(7)
            }
        );
        assert!("length=5".parse::<GenSpec>().is_err());
        assert!("segments=2,length=5,color=red".parse::<GenSpec>().is_err());
        assert!("segments=x,length=5".parse::<GenSpec>().is_err());
    }

    #[test]
    fn epsilon_required_for_approximate_solvers() {
        let src = Source::Gen("segments=1,length=4".parse().unwrap());
        for algo in [Algorithm::Monge, Algorithm::Halfspace] {
            let err = run(&RunSpec::new(src.clone(), algo, 1.0)).unwrap_err();
            assert_eq!(err.exit_code(), 3);
        }
        assert!(run(&RunSpec::new(src, Algorithm::Exact, 1.0)).is_ok());
    }

    #[test]
    fn monge_rejects_zero_penalty() {
        let mut spec = RunSpec::new(
            Source::Gen("segments=1,length=4".parse().unwrap()),
            Algorithm::Monge,
            0.0,
        );
        spec.epsilon = Some(0.1);
        let err = run(&spec).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert_eq!(
            err.to_string(),
            "penalty must be positive for multiplicative mode"
        );
        assert_eq!(err.report().code, "penalty_not_positive");
    }

    #[test]
    fn negative_penalty_is_a_config_error() {
        let spec = RunSpec::new(
            Source::Gen("segments=1,length=4".parse().unwrap()),
            Algorithm::Exact,
            -1.0,
        );
        assert_eq!(run(&spec).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn brute_force_size_limit_is_a_solver_error() {
        let spec = RunSpec::new(
            Source::Gen("segments=2,length=64".parse().unwrap()),
            Algorithm::Brute,
            1.0,
        );
        assert_eq!(run(&spec).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn report_round_trips() {
        let mut spec = RunSpec::new(
            Source::Gen("segments=3,length=50".parse().unwrap()),
            Algorithm::Halfspace,
            1.0,
        );
        spec.epsilon = Some(0.01);
        spec.backend = Backend::KdTree;
        let report = run(&spec).unwrap();
        assert_eq!(RunReport::from_json(&report.to_json()).unwrap(), report);
        assert_eq!(report.config.backend.as_deref(), Some("kdtree"));
    }
}
