//! Signal representation, prefix statistics and the transition weights
//! shared by every solver.
//!
//! Positions are 1-based (`P_1..P_n`); DP states are 0-based with state 0
//! the empty prefix. A segment is the half-open transition `(j, i]`, i.e.
//! the values `P_{j+1}..P_i`.

use crate::{Result, Scalar, SegError};

/// An immutable signal with prefix sums `S` and prefix sums of squares `Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal<T> {
    values: Vec<T>,
    prefix_sum: Vec<T>,
    prefix_sq: Vec<T>,
}

impl<T: Scalar> Signal<T> {
    /// Builds a signal, rejecting NaN and infinite values. An empty signal
    /// is allowed here; solvers reject it.
    pub fn new(values: Vec<T>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(SegError::NonFiniteValue { index: index + 1 });
        }
        let mut prefix_sum = Vec::with_capacity(values.len() + 1);
        let mut prefix_sq = Vec::with_capacity(values.len() + 1);
        let (mut s, mut q) = (T::zero(), T::zero());
        prefix_sum.push(s);
        prefix_sq.push(q);
        for &v in &values {
            s = s + v;
            q = q + v * v;
            prefix_sum.push(s);
            prefix_sq.push(q);
        }
        Ok(Self {
            values,
            prefix_sum,
            prefix_sq,
        })
    }

    pub fn from_slice(values: &[T]) -> Result<Self> {
        Self::new(values.to_vec())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `S_0..S_n`.
    pub fn prefix_sum(&self) -> &[T] {
        &self.prefix_sum
    }

    /// `Q_0..Q_n`.
    pub fn prefix_sq(&self) -> &[T] {
        &self.prefix_sq
    }

    /// Value at 1-based position `m`.
    #[inline]
    pub fn at(&self, m: usize) -> T {
        self.values[m - 1]
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(SegError::EmptySignal)
        } else {
            Ok(())
        }
    }

    #[inline]
    fn check(&self, j: usize, i: usize) -> Result<()> {
        if j < i && i <= self.len() {
            Ok(())
        } else {
            Err(SegError::InvalidSegment {
                j,
                i,
                n: self.len(),
            })
        }
    }

    #[inline]
    pub(crate) fn sum_between(&self, j: usize, i: usize) -> T {
        self.prefix_sum[i] - self.prefix_sum[j]
    }

    #[inline]
    pub(crate) fn sq_between(&self, j: usize, i: usize) -> T {
        self.prefix_sq[i] - self.prefix_sq[j]
    }

    /// `(S_i - S_j)^2 / (i - j)`, the part of the segment cost that couples
    /// the two endpoints.
    #[inline]
    pub(crate) fn coupling(&self, j: usize, i: usize) -> T {
        let s = self.sum_between(j, i);
        s * s / T::of_index(i - j)
    }

    #[inline]
    pub(crate) fn sse_unchecked(&self, j: usize, i: usize) -> T {
        let sse = self.sq_between(j, i) - self.coupling(j, i);
        if sse < T::zero() {
            T::zero()
        } else {
            sse
        }
    }

    #[inline]
    pub(crate) fn wprime_unchecked(&self, j: usize, i: usize) -> T {
        let s = self.sum_between(j, i);
        let w = T::of_index(i - j) * self.sq_between(j, i) - s * s;
        if w < T::zero() {
            T::zero()
        } else {
            w
        }
    }

    #[inline]
    pub(crate) fn mean_unchecked(&self, j: usize, i: usize) -> T {
        self.sum_between(j, i) / T::of_index(i - j)
    }

    /// Least-squares error of fitting one constant to `P_{j+1..i}`:
    /// `Q_i - Q_j - (S_i - S_j)^2 / (i - j)`, clamped at zero.
    pub fn segment_sse(&self, j: usize, i: usize) -> Result<T> {
        self.check(j, i)?;
        Ok(self.sse_unchecked(j, i))
    }

    /// Mean of `P_{j+1..i}`, the optimal constant for that segment.
    pub fn segment_mean(&self, j: usize, i: usize) -> Result<T> {
        self.check(j, i)?;
        Ok(self.mean_unchecked(j, i))
    }

    /// Full transition weight `w(j, i) = sse(j, i) + C`.
    pub fn weight(&self, cfg: &SolverConfig<T>, j: usize, i: usize) -> Result<T> {
        Ok(self.segment_sse(j, i)? + cfg.penalty)
    }

    /// Shifted weight `-(S_i - S_j)^2 / (i - j) + C`; it differs from
    /// [`weight`](Self::weight) by exactly `Q_i - Q_j`.
    pub fn weight_shifted(&self, cfg: &SolverConfig<T>, j: usize, i: usize) -> Result<T> {
        self.check(j, i)?;
        Ok(cfg.penalty - self.coupling(j, i))
    }

    /// Length-scaled SSE `(i - j)(Q_i - Q_j) - (S_i - S_j)^2`, equal to the
    /// sum of `(P_a - P_b)^2` over all pairs inside the segment. Monge.
    pub fn weight_wprime(&self, j: usize, i: usize) -> Result<T> {
        self.check(j, i)?;
        Ok(self.wprime_unchecked(j, i))
    }
}

/// Penalty and tolerance shared by all solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    /// Per-segment penalty `C`, in squared signal units.
    pub penalty: T,
    /// Approximation tolerance. Relative for the multiscale solver,
    /// absolute (squared signal units) for the additive solver.
    pub epsilon: T,
    /// Upper end of the additive solver's bisection bracket. `None` means
    /// the default `n * U^2`.
    pub value_cap: Option<T>,
}

impl<T: Scalar> SolverConfig<T> {
    /// Config with the given penalty and `epsilon = 0.1`.
    pub fn new(penalty: T) -> Result<Self> {
        Self::with_epsilon(penalty, T::lit(0.1))
    }

    pub fn with_epsilon(penalty: T, epsilon: T) -> Result<Self> {
        let cfg = Self {
            penalty,
            epsilon,
            value_cap: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn value_cap(mut self, cap: T) -> Result<Self> {
        if !cap.is_finite() || cap < T::zero() {
            return Err(SegError::InvalidValueCap);
        }
        self.value_cap = Some(cap);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.penalty.is_finite() || self.penalty < T::zero() {
            return Err(SegError::InvalidPenalty);
        }
        if !self.epsilon.is_finite() || self.epsilon <= T::zero() {
            return Err(SegError::InvalidEpsilon);
        }
        if let Some(cap) = self.value_cap {
            if !cap.is_finite() || cap < T::zero() {
                return Err(SegError::InvalidValueCap);
            }
        }
        Ok(())
    }
}
