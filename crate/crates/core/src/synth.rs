//! Synthetic piecewise-constant signals with Gaussian noise.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::{Result, Scalar, SegError, Signal};

/// Parameters of a step signal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSpec {
    pub segments: usize,
    pub length: usize,
    /// Minimum gap between adjacent levels.
    pub jump: f64,
    /// Standard deviation of the additive noise.
    pub noise: f64,
    pub seed: u64,
}

/// A generated signal together with its ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct StepSignal<T> {
    pub signal: Signal<T>,
    /// 1-based segment end indices; last = length.
    pub boundaries: Vec<usize>,
    pub levels: Vec<f64>,
}

/// Draws a step signal. Deterministic in `spec.seed`.
///
/// Segment ends are a uniform random subset of `1..length`. Each level
/// moves from the previous one by `jump * (1 + u)`, `u ~ U[0, 1)`, in a
/// random direction.
pub fn gen_signal<T: Scalar>(spec: &StepSpec) -> Result<StepSignal<T>> {
    if spec.segments == 0 {
        return Err(SegError::InvalidGenerator(
            "segments must be at least 1".into(),
        ));
    }
    if spec.length < spec.segments {
        return Err(SegError::InvalidGenerator(format!(
            "length {} is shorter than the segment count {}",
            spec.length, spec.segments
        )));
    }
    if !spec.jump.is_finite() || spec.jump < 0.0 {
        return Err(SegError::InvalidGenerator(
            "jump must be finite and nonnegative".into(),
        ));
    }
    if !spec.noise.is_finite() || spec.noise < 0.0 {
        return Err(SegError::InvalidGenerator(
            "noise must be finite and nonnegative".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut boundaries: Vec<usize> = sample(&mut rng, spec.length - 1, spec.segments - 1)
        .into_iter()
        .map(|k| k + 1)
        .collect();
    boundaries.sort_unstable();
    boundaries.push(spec.length);

    let mut levels = Vec::with_capacity(spec.segments);
    let mut level = rng.random_range(-1.0..1.0) * spec.jump;
    for _ in 0..spec.segments {
        levels.push(level);
        let step = spec.jump * (1.0 + rng.random::<f64>());
        level += if rng.random_bool(0.5) { step } else { -step };
    }

    let normal =
        Normal::new(0.0, spec.noise).map_err(|e| SegError::InvalidGenerator(e.to_string()))?;
    let mut values = Vec::with_capacity(spec.length);
    let mut start = 0;
    for (&end, &lvl) in boundaries.iter().zip(&levels) {
        for _ in start..end {
            let eps = if spec.noise > 0.0 {
                normal.sample(&mut rng)
            } else {
                0.0
            };
            values.push(T::lit(lvl + eps));
        }
        start = end;
    }
    Ok(StepSignal {
        signal: Signal::new(values)?,
        boundaries,
        levels,
    })
}

/// `n` values uniform in `[lo, hi)`.
pub fn uniform_signal<T: Scalar>(n: usize, lo: f64, hi: f64, seed: u64) -> Signal<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n).map(|_| T::lit(rng.random_range(lo..hi))).collect();
    Signal::new(values).expect("uniform draws are finite")
}
