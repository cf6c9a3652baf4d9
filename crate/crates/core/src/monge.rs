//! Online minimization over a Monge weight.
//!
//! Given `a_0, a_1, ...` revealed one at a time, answers
//! `min_{j < i} a_j + w(j, i)` for increasing `i`. When `w` satisfies the
//! quadrangle inequality `w(i1,i4) + w(i2,i3) >= w(i1,i3) + w(i2,i4)`,
//! once a later candidate is at least as good as an earlier one it stays
//! so for every later `i`. Each live candidate therefore owns a contiguous
//! run of future states; a new candidate takes over a suffix, found by
//! binary search. `O(log n)` amortized weight evaluations per step.

use std::collections::VecDeque;

use crate::{ExtendedCost, Result, Scalar, SegError};

/// A weight on index pairs `j < i`.
pub trait MongeWeight<T> {
    fn weight(&self, j: usize, i: usize) -> ExtendedCost<T>;
}

impl<T, F> MongeWeight<T> for F
where
    F: Fn(usize, usize) -> ExtendedCost<T>,
{
    #[inline]
    fn weight(&self, j: usize, i: usize) -> ExtendedCost<T> {
        self(j, i)
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    j: usize,
    /// First state this candidate owns.
    start: usize,
}

/// Online minimizer for states `1..=n`. Ties go to the largest `j`.
#[derive(Debug)]
pub struct MongeEngine<T, W> {
    weight: W,
    n: usize,
    a: Vec<ExtendedCost<T>>,
    live: VecDeque<Candidate>,
    last_query: usize,
    evals: u64,
}

impl<T: Scalar, W: MongeWeight<T>> MongeEngine<T, W> {
    pub fn new(weight: W, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(SegError::EmptyEngine);
        }
        Ok(Self {
            weight,
            n,
            a: Vec::with_capacity(n),
            live: VecDeque::new(),
            last_query: 0,
            evals: 0,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of `a_j` values pushed so far.
    pub fn pushed(&self) -> usize {
        self.a.len()
    }

    /// Weight evaluations performed so far.
    pub fn evaluations(&self) -> u64 {
        self.evals
    }

    /// Candidates still able to win some future state.
    pub fn live_candidates(&self) -> usize {
        self.live.len()
    }

    #[inline]
    fn value(&mut self, j: usize, i: usize) -> ExtendedCost<T> {
        self.evals += 1;
        let mut w = self.weight.weight(j, i);
        w += &self.a[j];
        w
    }

    /// Reveals `a_j`; `j` must equal the number of values pushed so far.
    pub fn push_a(&mut self, j: usize, a_j: ExtendedCost<T>) -> Result<()> {
        if j != self.a.len() {
            return Err(SegError::OutOfOrderPush {
                expected: self.a.len(),
                got: j,
            });
        }
        self.a.push(a_j);
        if j >= self.n {
            // no state left for this candidate to serve
            return Ok(());
        }
        let first = j + 1;
        while let Some(&back) = self.live.back() {
            let t = back.start.max(first);
            if self.value(j, t) <= self.value(back.j, t) {
                self.live.pop_back();
                continue;
            }
            // j loses at t; find the first state where it wins, if any
            let (mut lo, mut hi) = (t, self.n + 1);
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if self.value(j, mid) <= self.value(back.j, mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            if hi <= self.n {
                self.live.push_back(Candidate { j, start: hi });
            }
            return Ok(());
        }
        self.live.push_back(Candidate { j, start: first });
        Ok(())
    }

    /// Returns `(min_{j<i} a_j + w(j,i), argmin)`.
    pub fn query_min(&mut self, i: usize) -> Result<(ExtendedCost<T>, usize)> {
        if i == 0 || i > self.n {
            return Err(SegError::StateOutOfRange { i, n: self.n });
        }
        if self.a.len() < i {
            return Err(SegError::QueryBeforePush {
                i,
                pushed: self.a.len(),
            });
        }
        if i < self.last_query {
            return Err(SegError::QueryOutOfOrder {
                i,
                last: self.last_query,
            });
        }
        self.last_query = i;
        while self.live.len() >= 2 && self.live[1].start <= i {
            self.live.pop_front();
        }
        let best = self.live[0];
        debug_assert!(best.start <= i && best.j < i);
        Ok((self.value(best.j, i), best.j))
    }
}

/// Reference `O(i)` scan: `(min_{j<i} a_j + w(j,i), largest argmin)`.
/// `a` must hold at least `i` values.
pub fn naive_min<T: Scalar, W: MongeWeight<T>>(
    weight: &W,
    a: &[ExtendedCost<T>],
    i: usize,
) -> (ExtendedCost<T>, usize) {
    let mut best: Option<(ExtendedCost<T>, usize)> = None;
    for (j, aj) in a.iter().enumerate().take(i) {
        let v = weight.weight(j, i) + aj;
        if best.as_ref().is_none_or(|(b, _)| v <= *b) {
            best = Some((v, j));
        }
    }
    best.expect("naive_min needs i >= 1")
}
