use std::fmt::Write as _;
use std::time::Instant;

use pcseg::exact::BRUTEFORCE_MAX_LEN;
use pcseg::synth::{gen_signal, StepSpec};
use pcseg::{solve, Algorithm, Backend, SolverConfig64};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub backend: Backend,
    pub penalty: f64,
    pub epsilon: f64,
    /// Largest `n` at which the exact reference is still run.
    pub exact_max: usize,
    /// Timed repetitions per cell; the mean is reported.
    pub runs: usize,
    pub seed: u64,
}

/// `base, 2 base, 4 base, ...` up to and including `max`.
pub fn ladder(base: usize, max: usize) -> Vec<usize> {
    std::iter::successors(Some(base.max(1)), |&n| n.checked_mul(2))
        .take_while(|&n| n <= max)
        .collect()
}

impl Default for BenchSpec {
    fn default() -> Self {
        Self {
            sizes: ladder(256, 4096),
            algorithms: vec![
                Algorithm::Exact,
                Algorithm::ExactPruned,
                Algorithm::Monge,
                Algorithm::Halfspace,
            ],
            backend: Backend::Linear,
            penalty: 1.0,
            epsilon: 0.1,
            exact_max: 1 << 15,
            runs: 1,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub solver: String,
    pub n: usize,
    pub ms: f64,
    pub value: f64,
    /// `value / exact value`, when the exact reference was run.
    pub ratio: Option<f64>,
}

/// Runs every solver on a noisy step signal of each size. Brute force is
/// skipped above its size limit.
pub fn bench(spec: &BenchSpec) -> Result<Vec<BenchRow>, CliError> {
    let cfg = SolverConfig64::with_epsilon(spec.penalty, spec.epsilon)?;
    let runs = spec.runs.max(1);
    let mut rows = Vec::new();
    for &n in &spec.sizes {
        let step = StepSpec {
            segments: (n / 64).clamp(1, n),
            length: n,
            jump: 3.0,
            noise: 1.0,
            seed: spec.seed ^ n as u64,
        };
        let sig = gen_signal::<f64>(&step)?.signal;
        let reference = if n <= spec.exact_max {
            Some(pcseg::solve_exact(&sig, &cfg)?.value)
        } else {
            None
        };
        for &algo in &spec.algorithms {
            if algo == Algorithm::Brute && n > BRUTEFORCE_MAX_LEN {
                continue;
            }
            let start = Instant::now();
            let mut value = 0.0;
            for _ in 0..runs {
                value = solve(&sig, &cfg, algo, spec.backend)?.value;
            }
            let ms = start.elapsed().as_secs_f64() * 1e3 / runs as f64;
            rows.push(BenchRow {
                solver: algo.name().to_string(),
                n,
                ms,
                value,
                ratio: reference.map(|r| value / r),
            });
        }
    }
    Ok(rows)
}

pub fn format_tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from("solver\tn\tms\tvalue\tratio\n");
    for r in rows {
        let ratio = r.ratio.map_or("NA".to_string(), |x| format!("{x:.6}"));
        let _ = writeln!(
            out,
            "{}\t{}\t{:.3}\t{}\t{}",
            r.solver, r.n, r.ms, r.value, ratio
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_doubles() {
        assert_eq!(ladder(256, 2048), vec![256, 512, 1024, 2048]);
        assert_eq!(ladder(256, 300), vec![256]);
        assert!(ladder(256, 100).is_empty());
    }

    #[test]
    fn small_bench_has_ratios() {
        let spec = BenchSpec {
            sizes: vec![16, 64],
            algorithms: Algorithm::ALL.to_vec(),
            ..BenchSpec::default()
        };
        let rows = bench(&spec).unwrap();
        // brute only at n = 16
        assert_eq!(rows.len(), 5 + 4);
        for r in &rows {
            let ratio = r.ratio.unwrap();
            match r.solver.as_str() {
                "monge" => assert!((1.0 - 1e-9..=1.1).contains(&ratio)),
                "halfspace" => assert!((r.value - r.value / ratio).abs() <= 0.1),
                _ => assert!((ratio - 1.0).abs() < 1e-9),
            }
        }
        let tsv = format_tsv(&rows);
        assert_eq!(tsv.lines().count(), rows.len() + 1);
        assert!(tsv.starts_with("solver\tn\tms\tvalue\tratio\n"));
    }
}
