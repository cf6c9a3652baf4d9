use pcseg::synth::uniform_signal;
use pcseg::{
    solve_additive_with, solve_bruteforce, solve_exact, solve_exact_pruned, solve_multiscale,
    Halfspace4, HalfspaceSet, KdForest, LinearScan, Point4, Signal64, SolverConfig64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one self-test check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()) + 1e-12
}

fn instance(rng: &mut ChaCha8Rng, max_n: usize, eps: f64) -> (Signal64, SolverConfig64) {
    let n = rng.random_range(1..=max_n);
    let sig = uniform_signal(n, -5.0, 5.0, rng.random());
    let c = [0.1, 1.0, 10.0][rng.random_range(0..3)];
    (
        sig,
        SolverConfig64::with_epsilon(c, eps).expect("valid config"),
    )
}

fn check(name: &'static str, trials: usize, mut f: impl FnMut() -> Option<String>) -> Check {
    for _ in 0..trials {
        if let Some(detail) = f() {
            return Check {
                name,
                passed: false,
                detail,
            };
        }
    }
    Check {
        name,
        passed: true,
        detail: format!("{trials} trials"),
    }
}

/// Quick oracle-equivalence pass over every solver and both halfspace
/// backends.
pub fn selftest(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(check("exact = brute force", 300, || {
        let (sig, cfg) = instance(&mut rng, 12, 0.1);
        let e = solve_exact(&sig, &cfg).ok()?.value;
        let b = solve_bruteforce(&sig, &cfg).ok()?.value;
        (!close(e, b)).then(|| format!("n={}: {e} vs {b}", sig.len()))
    }));
    out.push(check("pruned = exact", 100, || {
        let (sig, cfg) = instance(&mut rng, 400, 0.1);
        let e = solve_exact(&sig, &cfg).ok()?.value;
        let p = solve_exact_pruned(&sig, &cfg).ok()?.value;
        (!close(e, p)).then(|| format!("n={}: {p} vs {e}", sig.len()))
    }));
    out.push(check("multiscale within 1+eps", 100, || {
        let eps = [0.5, 0.1][rng.random_range(0..2)];
        let (sig, cfg) = instance(&mut rng, 400, eps);
        let e = solve_exact(&sig, &cfg).ok()?.value;
        let m = solve_multiscale(&sig, &cfg).ok()?.value;
        (m < e - 1e-9 * e || m > (1.0 + eps) * e).then(|| format!("n={}: {m} vs {e}", sig.len()))
    }));
    out.push(check("additive within eps", 50, || {
        let eps = [0.01, 0.001][rng.random_range(0..2)];
        let (sig, cfg) = instance(&mut rng, 300, eps);
        let e = solve_exact(&sig, &cfg).ok()?.value;
        let a = solve_additive_with(&sig, &cfg, LinearScan::new())
            .ok()?
            .0
            .value;
        let k = solve_additive_with(&sig, &cfg, KdForest::new())
            .ok()?
            .0
            .value;
        if a != k {
            return Some(format!("backends disagree: {a} vs {k}"));
        }
        ((a - e).abs() > eps).then(|| format!("n={}: {a} vs {e}", sig.len()))
    }));
    out.push(check("kd-forest = linear scan", 20, || {
        let mut lin = LinearScan::new();
        let mut kd = KdForest::new();
        for t in 0..200 {
            let mut c = [0.0; 4];
            c.iter_mut()
                .for_each(|x| *x = rng.random_range(-4..=4) as f64);
            let p = Point4::new(c, t);
            lin.insert(p).ok()?;
            kd.insert(p).ok()?;
            let mut q = [0.0; 4];
            q.iter_mut()
                .for_each(|x| *x = rng.random_range(-3..=3) as f64);
            let h = Halfspace4::new(q, rng.random_range(-20..=20) as f64);
            if lin.query(&h) != kd.query(&h) {
                return Some(format!("after {} inserts", t + 1));
            }
        }
        None
    }));
    out
}
