mod common;

use pcseg::additive::{feasibility_query, lift_state};
use pcseg::synth::uniform_signal;
use pcseg::{
    exact_table, solve_additive, solve_additive_with, solve_exact, value_cap, HalfspaceSet,
    KdForest, LinearScan, Signal64, SolverConfig64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn instances(count: usize, max_n: usize, seed: u64) -> Vec<(Signal64, SolverConfig64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|t| {
            let n = rng.random_range(1..=max_n);
            let sig = uniform_signal(n, -5.0, 5.0, rng.random());
            let c = rng.random_range(0.05..4.0);
            let eps = [0.01, 0.001][t % 2];
            (sig, SolverConfig64::with_epsilon(c, eps).unwrap())
        })
        .collect()
}

/// `min_j DP~_j + w~(j, i) + Q_i`, evaluated directly.
fn direct_bar(sig: &Signal64, cfg: &SolverConfig64, dp: &[f64], i: usize) -> f64 {
    (0..i)
        .map(|j| dp[j] + sig.weight_shifted(cfg, j, i).unwrap() + sig.prefix_sq()[i])
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn per_state_bound_holds() {
    for (sig, cfg) in instances(80, 200, 41) {
        let n = sig.len();
        let table = exact_table(&sig, &cfg).unwrap();
        let (r, st) = solve_additive_with(&sig, &cfg, LinearScan::new()).unwrap();
        assert_eq!(st.dp_tilde[0], 0.0);
        for i in 1..=n {
            // compared in objective units; the shift by Q_i is common to both
            let err = (st.opt_tilde[i] - table.opt[i]).abs();
            let bound = i as f64 * cfg.epsilon / n as f64 + 1e-12;
            assert!(err <= bound, "state {i}/{n}: {err} > {bound}");
            let (lo, hi) = st.brackets[i];
            assert!(hi - lo <= cfg.epsilon / n as f64);
        }
        assert!((r.value - table.opt[n]).abs() <= cfg.epsilon);
    }
}

#[test]
fn every_bisection_step_is_consistent() {
    for (sig, cfg) in instances(60, 30, 42) {
        let n = sig.len();
        let (_, st) = solve_additive_with(&sig, &cfg, LinearScan::new()).unwrap();
        let cap = value_cap(&sig, &cfg).unwrap();
        let width = cfg.epsilon / n as f64;
        let mut pts = LinearScan::new();
        pts.insert(lift_state(&sig, 0, 0.0)).unwrap();
        for i in 1..=n {
            let bar = direct_bar(&sig, &cfg, &st.dp_tilde, i);
            let tol = 1e-9 * (1.0 + bar.abs());
            let decide = |v: f64| {
                let got = feasibility_query(&pts, &sig, &cfg, i, v).is_some();
                if (v - bar).abs() > tol {
                    assert_eq!(got, v >= bar, "state {i}, v {v}, bar {bar}");
                }
                got
            };
            let (mut lo, mut hi) = (0.0, cap);
            let mut step = width;
            while !decide(hi) {
                lo = hi;
                hi += step;
                step += step;
            }
            while hi - lo > width {
                assert!(hi >= bar - tol);
                assert!(lo == 0.0 || lo <= bar + tol);
                let mid = (lo + hi) / 2.0;
                if decide(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            assert_eq!((lo, hi), st.brackets[i], "state {i}");
            let mid = (lo + hi) / 2.0;
            assert!((mid - bar).abs() <= width / 2.0 + tol);
            if i < n {
                pts.insert(lift_state(&sig, i, st.dp_tilde[i])).unwrap();
            }
        }
    }
}

#[test]
fn witness_path_is_near_optimal() {
    for (sig, cfg) in instances(80, 200, 43) {
        let (r, _) = solve_additive_with(&sig, &cfg, LinearScan::new()).unwrap();
        let exact = solve_exact(&sig, &cfg).unwrap().value;
        let path = r.true_cost(&sig, &cfg).unwrap();
        assert!(
            path <= r.value + cfg.epsilon + 1e-12,
            "{path} > {} + eps",
            r.value
        );
        assert!(path >= exact - 1e-9 * exact.max(1.0));
        assert_eq!(*r.boundaries.last().unwrap(), sig.len());
    }
}

#[test]
fn query_count_is_bounded() {
    for (sig, cfg) in instances(50, 200, 44) {
        let n = sig.len();
        let (r, st) = solve_additive_with(&sig, &cfg, LinearScan::new()).unwrap();
        let cap = value_cap(&sig, &cfg).unwrap();
        let budget = (cap * n as f64 / cfg.epsilon).log2().ceil() as u32 + 1;
        assert_eq!(st.queries.len(), n + 1);
        assert_eq!(st.queries[0], 0);
        assert!(
            st.queries[1..].iter().all(|&q| q >= 1 && q <= budget),
            "{:?} > {budget}",
            st.queries
        );
        assert_eq!(
            r.stats.queries,
            st.queries.iter().map(|&q| u64::from(q)).sum::<u64>()
        );
    }
}

#[test]
fn kdforest_backend_matches_linear_scan() {
    for (sig, cfg) in instances(30, 300, 45) {
        let a = solve_additive_with(&sig, &cfg, LinearScan::new()).unwrap();
        let b = solve_additive_with(&sig, &cfg, KdForest::new()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn five_hundred_point_example() {
    let sig: Signal64 = uniform_signal(500, -5.0, 5.0, 46);
    let cfg = SolverConfig64::with_epsilon(1.0, 0.001).unwrap();
    let a = solve_additive(&sig, &cfg).unwrap();
    let e = solve_exact(&sig, &cfg).unwrap();
    assert!(
        (a.value - e.value).abs() <= 0.001,
        "{} vs {}",
        a.value,
        e.value
    );
}
