//! Additive-`epsilon` solver driven by halfspace emptiness queries.
//!
//! Work in the shifted domain `DP_i = OPT_i - Q_i`, whose recurrence
//! `DP_i = min_j DP_j - (S_i - S_j)^2 / (i - j) + C` has no second-order
//! terms. For a candidate `x`, "some `j < i` has
//! `x >= DP_j - (S_i - S_j)^2 / (i - j)`" multiplies out to
//!
//! ```text
//! x*i + S_i^2 >= (x, i, S_i, -1) . (j, DP_j, 2 S_j, S_j^2 + j DP_j)
//! ```
//!
//! so each earlier state becomes a 4D point and feasibility of a value is
//! one emptiness query. Every state's value is bisected to width
//! `epsilon / n`; the per-state errors add up to at most `epsilon`.
//!
//! The bisection runs over candidate `OPT_i` values in `[0, n U^2]` and is
//! converted to the shifted domain inside the query with
//! `x = v - Q_i - C`.

use crate::result::walk_predecessors;
use crate::{
    Halfspace4, HalfspaceSet, LinearScan, Point4, Result, Scalar, SegmentationResult, Signal,
    SolverConfig, SolverStats, Witness,
};

/// `n * U^2` with `U = max(sqrt(C), |P_1|, ..., |P_n|)`: every `OPT_i` is
/// at most `i * C <= n * U^2`.
pub fn value_cap<T: Scalar>(sig: &Signal<T>, cfg: &SolverConfig<T>) -> Result<T> {
    sig.require_nonempty()?;
    cfg.validate()?;
    let u = sig
        .values()
        .iter()
        .fold(cfg.penalty.sqrt(), |acc, v| acc.max(v.abs()));
    Ok(T::of_index(sig.len()) * u * u)
}

/// Lifted point for state `j` with shifted value `dp_j`.
#[inline]
pub fn lift_state<T: Scalar>(sig: &Signal<T>, j: usize, dp_j: T) -> Point4<T> {
    let jf = T::of_index(j);
    let s = sig.prefix_sum()[j];
    Point4::new([jf, dp_j, s + s, s * s + jf * dp_j], j)
}

/// Halfspace encoding "some stored `j` reaches state `i` with total cost
/// at most `v`".
#[inline]
pub fn feasibility_halfspace<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    i: usize,
    v: T,
) -> Halfspace4<T> {
    let x = v - sig.prefix_sq()[i] - cfg.penalty;
    let fi = T::of_index(i);
    let s = sig.prefix_sum()[i];
    Halfspace4::new([x, fi, s, -T::one()], x * fi + s * s)
}

/// Witness `j` such that `DP~_j + w~(j, i) + Q_i <= v`, if one is stored.
pub fn feasibility_query<T: Scalar, S: HalfspaceSet<T>>(
    pts: &S,
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    i: usize,
    v: T,
) -> Option<Witness<T>> {
    pts.query(&feasibility_halfspace(sig, cfg, i, v))
}

/// Per-state record of an additive solve.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditiveState<T> {
    /// Shifted approximations `DP~_0..DP~_n`.
    pub dp_tilde: Vec<T>,
    /// `OPT~_i = DP~_i + Q_i`.
    pub opt_tilde: Vec<T>,
    /// Predecessor reported by the last feasible query of each state.
    pub witness: Vec<usize>,
    /// Final `(low, high)` bracket of each state; state 0 is `(0, 0)`.
    pub brackets: Vec<(T, T)>,
    /// Emptiness queries issued per state.
    pub queries: Vec<u32>,
}

/// Additive solver on the linear-scan backend.
pub fn solve_additive<T: Scalar>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
) -> Result<SegmentationResult<T>> {
    solve_additive_with(sig, cfg, LinearScan::new()).map(|(r, _)| r)
}

/// Additive solver on any backend; `pts` must start empty.
///
/// Guarantees `|value - OPT_n| <= epsilon` and, per state,
/// `|DP~_i - DP_i| <= i * epsilon / n`.
pub fn solve_additive_with<T: Scalar, S: HalfspaceSet<T>>(
    sig: &Signal<T>,
    cfg: &SolverConfig<T>,
    mut pts: S,
) -> Result<(SegmentationResult<T>, AdditiveState<T>)> {
    sig.require_nonempty()?;
    cfg.validate()?;
    let cap = match cfg.value_cap {
        Some(cap) => cap,
        None => value_cap(sig, cfg)?,
    };
    let n = sig.len();
    let width = cfg.epsilon / T::of_index(n);
    let two = T::lit(2.0);

    let mut state = AdditiveState {
        dp_tilde: vec![T::zero(); n + 1],
        opt_tilde: vec![T::zero(); n + 1],
        witness: vec![0; n + 1],
        brackets: vec![(T::zero(), T::zero()); n + 1],
        queries: vec![0; n + 1],
    };
    pts.insert(lift_state(sig, 0, T::zero()))?;

    for i in 1..=n {
        let mut queries = 0u32;
        let mut low = T::zero();
        let mut high = cap;
        // the cap bounds exact OPT_i; rounding or accumulated slack can
        // push the approximate transition just past it, so gallop upwards
        let mut step = width;
        let mut witness = loop {
            queries += 1;
            if let Some(w) = feasibility_query(&pts, sig, cfg, i, high) {
                break w;
            }
            low = high;
            high = high + step;
            step = step + step;
        };
        while high - low > width {
            let mid = (low + high) / two;
            queries += 1;
            match feasibility_query(&pts, sig, cfg, i, mid) {
                Some(w) => {
                    high = mid;
                    witness = w;
                }
                None => low = mid,
            }
        }
        let opt = (low + high) / two;
        let dp = opt - sig.prefix_sq()[i];
        state.opt_tilde[i] = opt;
        state.dp_tilde[i] = dp;
        state.witness[i] = witness.tag;
        state.brackets[i] = (low, high);
        state.queries[i] = queries;
        if i < n {
            pts.insert(lift_state(sig, i, dp))?;
        }
    }

    let stats = SolverStats {
        queries: state.queries.iter().map(|&q| u64::from(q)).sum(),
        ..SolverStats::default()
    };
    let result = SegmentationResult::from_boundaries(
        sig,
        walk_predecessors(&state.witness, n),
        state.opt_tilde[n],
        "halfspace",
        stats,
    );
    Ok((result, state))
}
