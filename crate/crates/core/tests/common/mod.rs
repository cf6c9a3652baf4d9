#![allow(dead_code)]

use pcseg::{
    segmentation_cost, ExtendedCost64, MongeWeight, SegmentationResult64, Signal64, SolverConfig64,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Relative comparison with an absolute floor of 1e-12.
pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()) + 1e-12
}

/// Checks the structural invariants of an exact result.
pub fn check_exact_result(r: &SegmentationResult64, sig: &Signal64, cfg: &SolverConfig64) {
    let n = sig.len();
    assert!(!r.boundaries.is_empty());
    assert_eq!(*r.boundaries.last().unwrap(), n);
    assert!(r.boundaries[0] >= 1);
    assert!(r.boundaries.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(r.levels.len(), r.boundaries.len());
    let mut start = 0;
    for (&end, &level) in r.boundaries.iter().zip(&r.levels) {
        let seg = &sig.values()[start..end];
        let mean = seg.iter().sum::<f64>() / seg.len() as f64;
        assert!(rel_close(level, mean, 1e-9), "level {level} vs mean {mean}");
        start = end;
    }
    let recomputed = segmentation_cost(sig, cfg, &r.boundaries).unwrap();
    assert!(
        rel_close(recomputed, r.value, 1e-9),
        "{recomputed} vs {}",
        r.value
    );
}

/// `lhs >= rhs` in extended order; finite parts get 1e-9 slack when the M
/// coefficients coincide.
pub fn ext_ge(lhs: &ExtendedCost64, rhs: &ExtendedCost64) -> bool {
    use std::cmp::Ordering::*;
    match lhs.mcoef.cmp(&rhs.mcoef) {
        Greater => true,
        Less => false,
        Equal => lhs.finite >= rhs.finite - 1e-9 * (1.0 + rhs.finite.abs()),
    }
}

/// `g(i - j) + r_j + s_i` with integer convex `g`: Monge, and every value
/// is exact in f64 so ties are real ties.
#[derive(Clone)]
pub struct ConvexDiff {
    g: Vec<f64>,
    r: Vec<f64>,
    s: Vec<f64>,
}

impl ConvexDiff {
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut g = vec![0.0; n + 1];
        let mut slope = rng.random_range(-20..5) as f64;
        for d in 1..=n {
            g[d] = g[d - 1] + slope;
            slope += rng.random_range(0..4) as f64;
        }
        let r = (0..=n).map(|_| rng.random_range(-30..30) as f64).collect();
        let s = (0..=n).map(|_| rng.random_range(-30..30) as f64).collect();
        Self { g, r, s }
    }
}

impl MongeWeight<f64> for ConvexDiff {
    fn weight(&self, j: usize, i: usize) -> ExtendedCost64 {
        ExtendedCost64::finite(self.g[i - j] + self.r[j] + self.s[i])
    }
}
