use crate::{Result, Scalar, SegError, Signal, SolverConfig};

/// Work counters reported by a solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// DP transitions `(j, i)` evaluated directly.
    pub transitions: u64,
    /// Halfspace emptiness queries issued.
    pub queries: u64,
    /// Monge weight evaluations.
    pub oracle_evals: u64,
}

/// A fitted segmentation.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentationResult<T> {
    /// 1-based end index of every segment, strictly increasing, last = n.
    pub boundaries: Vec<usize>,
    /// Mean of each segment.
    pub levels: Vec<T>,
    /// Objective value as computed by the solver. Exact for the exact
    /// solvers; an estimate within the stated guarantee otherwise.
    pub value: T,
    pub solver_name: &'static str,
    pub stats: SolverStats,
}

impl<T: Scalar> SegmentationResult<T> {
    pub(crate) fn from_boundaries(
        sig: &Signal<T>,
        boundaries: Vec<usize>,
        value: T,
        solver_name: &'static str,
        stats: SolverStats,
    ) -> Self {
        let mut levels = Vec::with_capacity(boundaries.len());
        let mut start = 0;
        for &end in &boundaries {
            levels.push(sig.mean_unchecked(start, end));
            start = end;
        }
        Self {
            boundaries,
            levels,
            value,
            solver_name,
            stats,
        }
    }

    pub fn segments(&self) -> usize {
        self.boundaries.len()
    }

    /// Expands the fit back to one level per input position.
    pub fn fitted(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.boundaries.last().copied().unwrap_or(0));
        let mut start = 0;
        for (&end, &level) in self.boundaries.iter().zip(&self.levels) {
            out.extend(std::iter::repeat_n(level, end - start));
            start = end;
        }
        out
    }

    /// True objective of this result's boundaries, recomputed from the signal.
    pub fn true_cost(&self, sig: &Signal<T>, cfg: &SolverConfig<T>) -> Result<T> {
        segmentation_cost(sig, cfg, &self.boundaries)
    }
}

/// `sum of segment SSE + C * segments` for the given 1-based end indices.
pub fn segmentation_cost<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    boundaries: &[usize],
) -> Result<T> {
    let n = sig.len();
    match boundaries.last() {
        Some(&last) if last == n => {}
        _ => {
            return Err(SegError::InvalidSegment {
                j: 0,
                i: boundaries.last().copied().unwrap_or(0),
                n,
            })
        }
    }
    let mut start = 0;
    let mut total = T::zero();
    for &end in boundaries {
        total = total + sig.segment_sse(start, end)? + cfg.penalty;
        start = end;
    }
    Ok(total)
}

/// Walks a predecessor array from `n` back to state 0.
pub(crate) fn walk_predecessors(pred: &[usize], n: usize) -> Vec<usize> {
    let mut boundaries = Vec::new();
    let mut i = n;
    while i > 0 {
        boundaries.push(i);
        i = pred[i];
    }
    boundaries.reverse();
    boundaries
}
