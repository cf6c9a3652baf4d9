//! Exact solvers: the quadratic dynamic program, its pruned variant, and
//! exhaustive enumeration for tiny inputs.

use std::collections::VecDeque;

use crate::result::walk_predecessors;
use crate::{Result, Scalar, SegError, SegmentationResult, Signal, SolverConfig, SolverStats};

/// Largest input [`solve_bruteforce`] accepts.
pub const BRUTEFORCE_MAX_LEN: usize = 20;

/// `OPT_0..OPT_n` and the chosen predecessor of every state.
#[derive(Debug, Clone, PartialEq)]
pub struct DPTable<T> {
    pub opt: Vec<T>,
    pub arg: Vec<usize>,
}

impl<T: Scalar> DPTable<T> {
    /// Shifted value `DP_i = OPT_i - Q_i`.
    pub fn shifted(&self, sig: &Signal<T>, i: usize) -> T {
        self.opt[i] - sig.prefix_sq()[i]
    }

    pub fn boundaries(&self) -> Vec<usize> {
        walk_predecessors(&self.arg, self.opt.len() - 1)
    }
}

/// Runs the recurrence with transitions into `i` restricted to
/// `lower(i) <= j < i`. Ties go to the largest `j`.
fn run_dp<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    mut lower: impl FnMut(usize) -> usize,
) -> (DPTable<T>, u64) {
    let n = sig.len();
    let mut opt = vec![T::zero(); n + 1];
    let mut arg = vec![0usize; n + 1];
    let mut transitions = 0u64;
    for i in 1..=n {
        let lo = lower(i);
        let mut best = T::infinity();
        let mut best_j = i - 1;
        for (j, &opt_j) in opt.iter().enumerate().take(i).skip(lo) {
            let cand = opt_j + sig.sse_unchecked(j, i);
            if cand <= best {
                best = cand;
                best_j = j;
            }
        }
        transitions += (i - lo) as u64;
        opt[i] = best + cfg.penalty;
        arg[i] = best_j;
    }
    (DPTable { opt, arg }, transitions)
}

/// The full DP table of the exact recurrence.
pub fn exact_table<T: Scalar>(sig: &Signal<T>, cfg: &SolverConfig<T>) -> Result<DPTable<T>> {
    sig.require_nonempty()?;
    cfg.validate()?;
    Ok(run_dp(sig, cfg, |_| 0).0)
}

/// Exact `O(n^2)` solver.
pub fn solve_exact<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
) -> Result<SegmentationResult<T>> {
    sig.require_nonempty()?;
    cfg.validate()?;
    let (table, transitions) = run_dp(sig, cfg, |_| 0);
    Ok(finish(sig, table, "exact", transitions))
}

/// Exact solver restricted to transitions that never put two points more
/// than `2 * sqrt(2C)` apart into one segment. Such a segment can always
/// be split for a strict gain, so the optimum is unchanged.
pub fn solve_exact_pruned<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
) -> Result<SegmentationResult<T>> {
    sig.require_nonempty()?;
    cfg.validate()?;
    let mut window = PruneWindow::new(sig, cfg);
    let (table, transitions) = run_dp(sig, cfg, |i| {
        debug_assert_eq!(window.next_state(), i);
        window.advance()
    });
    Ok(finish(sig, table, "exact-pruned", transitions))
}

fn finish<T: Scalar>(
    sig: &Signal<T>,
    table: DPTable<T>,
    name: &'static str,
    transitions: u64,
) -> SegmentationResult<T> {
    let n = sig.len();
    let value = table.opt[n];
    let stats = SolverStats {
        transitions,
        ..SolverStats::default()
    };
    SegmentationResult::from_boundaries(sig, table.boundaries(), value, name, stats)
}

/// Incremental tracker for the smallest admissible predecessor.
///
/// For state `i` the admissible `j` are exactly those where
/// `max(P_{j+1..i}) - min(P_{j+1..i}) <= 2 * sqrt(2C)`; that set is a
/// suffix `[lower, i - 1]` and `lower` never decreases, so two monotone
/// deques give every bound in `O(n)` total.
#[derive(Debug)]
pub struct PruneWindow<'a, T> {
    sig: &'a Signal<T>,
    limit_sq: T,
    lower: usize,
    next: usize,
    maxq: VecDeque<usize>,
    minq: VecDeque<usize>,
}

impl<'a, T: Scalar> PruneWindow<'a, T> {
    pub fn new(sig: &'a Signal<T>, cfg: &SolverConfig<T>) -> Self {
        Self {
            sig,
            // range > 2 sqrt(2C)  <=>  range^2 > 8C
            limit_sq: T::lit(8.0) * cfg.penalty,
            lower: 0,
            next: 1,
            maxq: VecDeque::new(),
            minq: VecDeque::new(),
        }
    }

    /// State whose bound the next [`advance`](Self::advance) returns.
    pub fn next_state(&self) -> usize {
        self.next
    }

    /// Returns the lower bound for the next state and moves on.
    pub fn advance(&mut self) -> usize {
        let i = self.next;
        let v = self.sig.at(i);
        while self.maxq.back().is_some_and(|&m| self.sig.at(m) <= v) {
            self.maxq.pop_back();
        }
        self.maxq.push_back(i);
        while self.minq.back().is_some_and(|&m| self.sig.at(m) >= v) {
            self.minq.pop_back();
        }
        self.minq.push_back(i);

        // window of positions is (lower, i]
        loop {
            let hi = self.sig.at(self.maxq[0]);
            let lo = self.sig.at(self.minq[0]);
            let range = hi - lo;
            if range * range <= self.limit_sq {
                break;
            }
            self.lower += 1;
            if self.maxq[0] <= self.lower {
                self.maxq.pop_front();
            }
            if self.minq[0] <= self.lower {
                self.minq.pop_front();
            }
        }
        self.next += 1;
        self.lower
    }
}

/// Smallest admissible `j` for transitions into state `i`.
pub fn prune_window<T: Scalar>(sig: &Signal<T>, cfg: &SolverConfig<T>, i: usize) -> Result<usize> {
    if i == 0 || i > sig.len() {
        return Err(SegError::StateOutOfRange { i, n: sig.len() });
    }
    let mut window = PruneWindow::new(sig, cfg);
    let mut lower = 0;
    for _ in 0..i {
        lower = window.advance();
    }
    Ok(lower)
}

/// Enumerates all `2^(n-1)` breakpoint subsets. Refuses `n > 20`.
pub fn solve_bruteforce<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
) -> Result<SegmentationResult<T>> {
    sig.require_nonempty()?;
    cfg.validate()?;
    let n = sig.len();
    if n > BRUTEFORCE_MAX_LEN {
        return Err(SegError::TooLarge {
            n,
            max: BRUTEFORCE_MAX_LEN,
        });
    }
    let mut best = T::infinity();
    let mut best_mask = 0u32;
    let mut transitions = 0u64;
    for mask in 0u32..(1u32 << (n - 1)) {
        let mut total = T::zero();
        let mut start = 0;
        for end in 1..=n {
            // bit end-1 set: a segment ends at position `end`
            if end == n || mask >> (end - 1) & 1 == 1 {
                total = total + sig.sse_unchecked(start, end) + cfg.penalty;
                transitions += 1;
                start = end;
            }
        }
        if total < best {
            best = total;
            best_mask = mask;
        }
    }
    let boundaries = (1..=n)
        .filter(|&end| end == n || best_mask >> (end - 1) & 1 == 1)
        .collect();
    let stats = SolverStats {
        transitions,
        ..SolverStats::default()
    };
    Ok(SegmentationResult::from_boundaries(
        sig, boundaries, best, "brute", stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[f64]) -> Signal<f64> {
        Signal::from_slice(v).unwrap()
    }

    fn cfg(c: f64) -> SolverConfig<f64> {
        SolverConfig::new(c).unwrap()
    }

    #[test]
    fn exact_examples() {
        let r = solve_exact(&sig(&[5.0, 5.0, 5.0]), &cfg(1.0)).unwrap();
        assert_eq!((r.value, r.boundaries.clone()), (1.0, vec![3]));
        assert_eq!(r.levels, vec![5.0]);

        let r = solve_exact(&sig(&[1.0, 1.0, 5.0, 5.0]), &cfg(1.0)).unwrap();
        assert_eq!((r.value, r.boundaries), (2.0, vec![2, 4]));
    }

    /// Alternating vector on which the segment weight is not Monge.
    /// Expected values come from exhaustive rational enumeration.
    #[test]
    fn alternating_fixture() {
        let s = sig(&[1.0, 2.0, 0.0, 2.0, 0.0, 2.0, 1.0]);
        let r = solve_exact(&s, &cfg(1.0)).unwrap();
        assert!((r.value - 287.0 / 49.0).abs() < 1e-12);
        assert_eq!(r.boundaries, vec![7]);
        let b = solve_bruteforce(&s, &cfg(1.0)).unwrap();
        assert!((b.value - r.value).abs() < 1e-12);
        assert_eq!(b.boundaries, vec![7]);
    }

    #[test]
    fn table_shape() {
        let s = sig(&[1.0, 1.0, 5.0, 5.0]);
        let t = exact_table(&s, &cfg(1.0)).unwrap();
        assert_eq!(t.opt[0], 0.0);
        assert_eq!(t.opt.len(), 5);
        assert_eq!(t.boundaries(), vec![2, 4]);
        assert_eq!(t.shifted(&s, 4), 2.0 - 52.0);
    }

    #[test]
    fn ties_prefer_largest_predecessor() {
        // C = 0: every split point ties on the constant signal;
        // the largest j wins at every state, giving singletons.
        let r = solve_exact(&sig(&[3.0, 3.0, 3.0]), &cfg(0.0)).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.boundaries, vec![1, 2, 3]);
    }

    #[test]
    fn bruteforce_examples() {
        let r = solve_bruteforce(&sig(&[5.0]), &cfg(3.5)).unwrap();
        assert_eq!((r.value, r.boundaries), (3.5, vec![1]));
        let r = solve_bruteforce(&sig(&[1.0, 1.0, 5.0, 5.0]), &cfg(100.0)).unwrap();
        assert_eq!((r.value, r.boundaries), (116.0, vec![4]));
        let r = solve_bruteforce(&sig(&[1.0, 1.0, 5.0, 5.0]), &cfg(1.0)).unwrap();
        assert_eq!(r.value, 2.0);
    }

    #[test]
    fn bruteforce_refuses_large() {
        let s = sig(&[0.0; 21]);
        assert_eq!(
            solve_bruteforce(&s, &cfg(1.0)),
            Err(SegError::TooLarge { n: 21, max: 20 })
        );
        assert!(solve_bruteforce(&sig(&[0.0; 20]), &cfg(1.0)).is_ok());
    }

    #[test]
    fn empty_signal_rejected() {
        let s = sig(&[]);
        assert_eq!(solve_exact(&s, &cfg(1.0)), Err(SegError::EmptySignal));
        assert_eq!(
            solve_exact_pruned(&s, &cfg(1.0)),
            Err(SegError::EmptySignal)
        );
        assert_eq!(solve_bruteforce(&s, &cfg(1.0)), Err(SegError::EmptySignal));
    }

    #[test]
    fn prune_window_examples() {
        assert_eq!(
            prune_window(&sig(&[0.0, 0.0, 0.0]), &cfg(1.0), 3).unwrap(),
            0
        );
        assert_eq!(prune_window(&sig(&[0.0, 10.0]), &cfg(1.0), 2).unwrap(), 1);
        let s = sig(&[0.0, 10.0, 10.0, 10.0]);
        assert_eq!(prune_window(&s, &cfg(1.0), 4).unwrap(), 1);
        assert_eq!(prune_window(&s, &cfg(1.0), 1).unwrap(), 0);
        assert!(prune_window(&s, &cfg(1.0), 0).is_err());
        assert!(prune_window(&s, &cfg(1.0), 5).is_err());
    }

    #[test]
    fn prune_threshold_is_strict() {
        // gap exactly 2 sqrt(2C) = 4 at C = 2 is still admissible
        let s = sig(&[0.0, 4.0]);
        assert_eq!(prune_window(&s, &cfg(2.0), 2).unwrap(), 0);
        let s = sig(&[0.0, 4.0 + 1e-9]);
        assert_eq!(prune_window(&s, &cfg(2.0), 2).unwrap(), 1);
    }

    #[test]
    fn pruned_examples() {
        let r = solve_exact_pruned(&sig(&[1.0, 1.0, 5.0, 5.0]), &cfg(1.0)).unwrap();
        assert_eq!(r.value, 2.0);
        let r = solve_exact_pruned(&sig(&[0.0, 0.0, 0.0]), &cfg(1.0)).unwrap();
        assert_eq!(r.value, 1.0);
        let r = solve_exact_pruned(&sig(&[0.0, 10.0, 10.0, 10.0]), &cfg(1.0)).unwrap();
        let e = solve_exact(&sig(&[0.0, 10.0, 10.0, 10.0]), &cfg(1.0)).unwrap();
        assert_eq!(r.value, e.value);
        assert!(r.stats.transitions < e.stats.transitions);
    }
}
