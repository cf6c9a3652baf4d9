//! Multiplicative `(1 + epsilon)` solver.
//!
//! The segment cost is `w'(j, i) / (i - j)` where `w'` is Monge; only the
//! division by the length breaks the property. Transition lengths are
//! split into geometric bands `[c, (1 + epsilon) c]` with
//! `c = (1 + epsilon)^(k-1)`. Within band `k` the length is replaced by the
//! constant `c`, which keeps the weight Monge and overestimates each edge
//! by at most a factor `1 + epsilon`. Lengths outside the band get
//! exponentially large sentinels (`2^(n - len) M` when too short,
//! `2^len M` when too long) that preserve the quadrangle inequality. One
//! [`MongeEngine`] per band; the driver takes the per-state minimum.

use crate::result::walk_predecessors;
use crate::{
    ExtendedCost, MongeEngine, MongeWeight, Result, Scalar, SegError, SegmentationResult, Signal,
    SolverConfig, SolverStats,
};

fn guard<T: Scalar>() -> T {
    T::epsilon() * T::lit(64.0)
}

/// Number of bands `max(1, ceil(ln n / ln(1 + epsilon)))`.
pub fn band_count<T: Scalar>(n: usize, epsilon: T) -> usize {
    if n <= 1 {
        return 1;
    }
    let ratio = T::of_index(n).ln() / (T::one() + epsilon).ln();
    // absorb rounding when ln n / ln(1 + eps) is an integer in exact math
    let m = (ratio * (T::one() - guard::<T>())).ceil();
    m.to_usize().unwrap_or(usize::MAX).max(1)
}

/// One geometric band of segment lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band<T> {
    /// 1-based band index.
    pub k: usize,
    /// Length stand-in `c' = (1 + epsilon)^(k-1)`.
    pub scale: T,
    /// Shortest length with a finite weight, `ceil(c')`.
    pub min_len: usize,
    /// Longest length with a finite weight, `floor((1 + epsilon) c')`.
    pub max_len: usize,
}

impl<T: Scalar> Band<T> {
    pub fn contains(&self, len: usize) -> bool {
        self.min_len <= len && len <= self.max_len
    }

    pub fn is_empty(&self) -> bool {
        self.min_len > self.max_len
    }
}

/// Bands for lengths `1..=n`. At least [`band_count`] of them; more only if
/// floating-point rounding would leave the longest lengths uncovered.
///
/// Scales are built by repeated multiplication so that band `k + 1`
/// starts at `ceil(x)` and band `k` ends at `floor(x)` for the same float
/// `x`; no length can fall between them.
pub fn bands<T: Scalar>(n: usize, epsilon: T) -> Vec<Band<T>> {
    let m = band_count(n, epsilon);
    let growth = T::one() + epsilon;
    let widen = T::one() + guard::<T>();
    let mut out = Vec::with_capacity(m);
    let mut scale = T::one();
    let mut k = 1;
    loop {
        let next = scale * growth;
        let min_len = scale.ceil().to_usize().unwrap_or(usize::MAX);
        let max_len = (next * widen).floor().to_usize().unwrap_or(usize::MAX);
        out.push(Band {
            k,
            scale,
            min_len,
            max_len,
        });
        if k >= m && max_len >= n {
            return out;
        }
        scale = next;
        k += 1;
    }
}

/// Band-restricted weight `w_k(j, i)`.
#[derive(Debug, Clone, Copy)]
pub struct BandedWeight<'a, T> {
    sig: &'a Signal<T>,
    band: Band<T>,
    inv_scale: T,
}

impl<'a, T: Scalar> BandedWeight<'a, T> {
    pub fn new(sig: &'a Signal<T>, band: Band<T>) -> Self {
        Self {
            sig,
            band,
            inv_scale: band.scale.recip(),
        }
    }

    pub fn band(&self) -> &Band<T> {
        &self.band
    }

    /// Same weight with index checking.
    pub fn checked(&self, j: usize, i: usize) -> Result<ExtendedCost<T>> {
        if j >= i || i > self.sig.len() {
            return Err(SegError::InvalidSegment {
                j,
                i,
                n: self.sig.len(),
            });
        }
        Ok(self.weight(j, i))
    }
}

impl<T: Scalar> MongeWeight<T> for BandedWeight<'_, T> {
    #[inline]
    fn weight(&self, j: usize, i: usize) -> ExtendedCost<T> {
        let len = i - j;
        if len < self.band.min_len {
            ExtendedCost::sentinel((self.sig.len() - len) as u32)
        } else if len > self.band.max_len {
            ExtendedCost::sentinel(len as u32)
        } else {
            ExtendedCost::finite(self.sig.wprime_unchecked(j, i) * self.inv_scale)
        }
    }
}

/// `(1 + epsilon)`-approximate solver. Requires `C > 0`.
///
/// The reported value is the optimum under the banded weights, so
/// `OPT <= value <= (1 + epsilon) OPT`; the boundaries realize it.
pub fn solve_multiscale<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
) -> Result<SegmentationResult<T>> {
    sig.require_nonempty()?;
    cfg.validate()?;
    if cfg.penalty <= T::zero() {
        return Err(SegError::PenaltyNotPositive);
    }
    let n = sig.len();
    let mut engines = Vec::new();
    for band in bands(n, cfg.epsilon) {
        // all-sentinel bands never produce a finite candidate
        if band.is_empty() || band.min_len > n {
            continue;
        }
        engines.push(MongeEngine::new(BandedWeight::new(sig, band), n)?);
    }

    let mut opt = vec![T::zero(); n + 1];
    let mut pred = vec![0usize; n + 1];
    for engine in &mut engines {
        engine.push_a(0, ExtendedCost::finite(T::zero()))?;
    }
    for i in 1..=n {
        let mut best: Option<(T, usize)> = None;
        for engine in &mut engines {
            let (value, j) = engine.query_min(i)?;
            let Some(v) = value.as_finite() else { continue };
            let better = match best {
                None => true,
                Some((b, bj)) => v < b || (v == b && j > bj),
            };
            if better {
                best = Some((v, j));
            }
        }
        // the unit-length edge is always finite in the first band
        let (v, j) = best.expect("band 1 covers length 1");
        opt[i] = v + cfg.penalty;
        pred[i] = j;
        if i < n {
            for engine in &mut engines {
                engine.push_a(i, ExtendedCost::finite(opt[i]))?;
            }
        }
    }

    let stats = SolverStats {
        oracle_evals: engines.iter().map(|e| e.evaluations()).sum(),
        ..SolverStats::default()
    };
    Ok(SegmentationResult::from_boundaries(
        sig,
        walk_predecessors(&pred, n),
        opt[n],
        "monge",
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = ExtendedCost<f64>;

    fn band(n: usize, eps: f64, k: usize) -> Band<f64> {
        bands(n, eps)[k - 1]
    }

    #[test]
    fn band_count_examples() {
        assert_eq!(band_count(1, 0.5), 1);
        assert_eq!(band_count(1024, 1.0), 10);
        assert_eq!(band_count(100, 0.1), 49);
        assert_eq!(band_count(2, 1.0), 1);
    }

    #[test]
    fn bands_cover_every_length() {
        for &eps in &[0.05, 0.1, 0.2, 0.5, 1.0, 3.0] {
            for n in [1usize, 2, 3, 7, 100, 1000, 4097] {
                let bs = bands(n, eps);
                assert!(bs.len() >= band_count(n, eps));
                for len in 1..=n {
                    assert!(
                        bs.iter().any(|b| b.contains(len)),
                        "eps {eps} n {n} len {len}"
                    );
                }
                for b in &bs {
                    assert!(b.min_len as f64 >= b.scale);
                }
            }
        }
    }

    #[test]
    fn banded_weight_examples() {
        let s = Signal::from_slice(&[5.0, 5.0]).unwrap();
        let w = BandedWeight::new(&s, band(2, 1.0, 1));
        assert_eq!(w.checked(0, 1).unwrap(), C::finite(0.0));

        let s = Signal::from_slice(&[1.0, 1.0, 5.0, 5.0]).unwrap();
        let w1 = BandedWeight::new(&s, band(4, 1.0, 1));
        assert_eq!(w1.checked(0, 4).unwrap(), C::sentinel(4));
        let w2 = BandedWeight::new(&s, band(4, 1.0, 2));
        assert_eq!(w2.band().scale, 2.0);
        assert_eq!(w2.checked(1, 2).unwrap(), C::sentinel(3));
        assert!(w2.checked(2, 2).is_err());
    }

    #[test]
    fn solve_examples() {
        let s = Signal::from_slice(&[5.0, 5.0, 5.0]).unwrap();
        let r = solve_multiscale(&s, &SolverConfig::with_epsilon(1.0, 0.5).unwrap()).unwrap();
        assert_eq!((r.value, r.boundaries), (1.0, vec![3]));

        let s = Signal::from_slice(&[1.0, 1.0, 5.0, 5.0]).unwrap();
        let r = solve_multiscale(&s, &SolverConfig::with_epsilon(1.0, 0.2).unwrap()).unwrap();
        assert!((2.0..=2.4).contains(&r.value), "{}", r.value);
    }

    #[test]
    fn zero_penalty_rejected() {
        let s = Signal::from_slice(&[1.0, 2.0]).unwrap();
        let cfg = SolverConfig::with_epsilon(0.0, 0.5).unwrap();
        assert_eq!(
            solve_multiscale(&s, &cfg),
            Err(SegError::PenaltyNotPositive)
        );
    }

    #[test]
    fn single_point() {
        let s = Signal::from_slice(&[4.0]).unwrap();
        let r = solve_multiscale(&s, &SolverConfig::with_epsilon(2.0, 0.1).unwrap()).unwrap();
        assert_eq!((r.value, r.boundaries), (2.0, vec![1]));
    }
}
