#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vagueq::{FiniteFuzzySet, FiniteSubset, Grade, QubitState, TableMeasure, Universe};

pub const ERF_ONE_OVER_SQRT2: f64 = 0.682_689_492_137_085_9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Universe {
    Universe::new((0..n).map(|i| format!("x{i}"))).unwrap()
}

pub fn random_set(r: &mut impl Rng, u: &Universe) -> FiniteFuzzySet {
    let grades = (0..u.len())
        .map(|_| Grade::new(r.gen::<f64>()).unwrap())
        .collect();
    FiniteFuzzySet::new(u.clone(), grades).unwrap()
}

/// Grades on the dyadic grid k/1024, where `1 - x` is exact.
pub fn random_dyadic_set(r: &mut impl Rng, u: &Universe) -> FiniteFuzzySet {
    let grades = (0..u.len())
        .map(|_| Grade::new(r.gen_range(0..=1024) as f64 / 1024.0).unwrap())
        .collect();
    FiniteFuzzySet::new(u.clone(), grades).unwrap()
}

/// A random normalized possibility distribution: one element at 1.
pub fn random_possibility(r: &mut impl Rng, u: &Universe) -> Vec<f64> {
    let mut p: Vec<f64> = (0..u.len()).map(|_| r.gen::<f64>()).collect();
    let top = r.gen_range(0..u.len());
    p[top] = 1.0;
    p
}

/// Random monotone set function indexed by bitmask: each subset takes the
/// larger of a fresh draw and its immediate subsets' values.
pub fn random_monotone_values(r: &mut impl Rng, n: usize) -> Vec<f64> {
    let full = (1usize << n) - 1;
    let mut mu = vec![0.0f64; 1 << n];
    for mask in 1..=full {
        let mut v: f64 = r.gen::<f64>();
        for i in 0..n {
            if mask & (1 << i) != 0 {
                v = v.max(mu[mask & !(1 << i)]);
            }
        }
        mu[mask] = v;
    }
    mu[full] = 1.0;
    mu
}

pub fn table_from_values(u: &Universe, mu: &[f64]) -> TableMeasure {
    TableMeasure::from_fn(u.clone(), |s| mu[s.mask() as usize]).unwrap()
}

/// Brute-force `sup_α min(α, μ(A ∩ {f ≥ α}))` over `levels` evenly spaced
/// α in [0, 1] together with the sample values of `f`.
pub fn sugeno_scan(f: &[f64], a_mask: usize, mu: impl Fn(usize) -> f64, levels: usize) -> f64 {
    let alphas = (0..=levels)
        .map(|k| k as f64 / levels as f64)
        .chain(f.iter().copied());
    let mut best = 0.0f64;
    for alpha in alphas {
        let mut cut = 0usize;
        for (i, &v) in f.iter().enumerate() {
            if a_mask & (1 << i) != 0 && v >= alpha {
                cut |= 1 << i;
            }
        }
        best = best.max(alpha.min(mu(cut)));
    }
    best
}

pub fn possibility_of_mask(pi: &[f64], mask: usize) -> f64 {
    (0..pi.len())
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| pi[i])
        .fold(0.0, f64::max)
}

pub fn subset(n: usize, mask: usize) -> FiniteSubset {
    FiniteSubset::from_mask(n, mask as u64).unwrap()
}

/// Composite Simpson rule with `2m` panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, m: usize) -> f64 {
    let n = 2 * m;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + k as f64 * h);
    }
    s * h / 3.0
}

pub fn std_normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

pub fn random_qubit(r: &mut impl Rng) -> QubitState {
    let v: Vec<f64> = (0..4).map(|_| r.gen_range(-1.0..1.0)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-3);
    QubitState::new(
        Complex64::new(v[0] / norm, v[1] / norm),
        Complex64::new(v[2] / norm, v[3] / norm),
    )
    .unwrap_or_else(|_| QubitState::ket0())
}

pub fn vagueq_bin() -> &'static str {
    env!("CARGO_BIN_EXE_vagueq")
}

pub fn run_cli(args: &[&str]) -> std::process::Output {
    std::process::Command::new(vagueq_bin())
        .args(args)
        .env_remove("VAGUEQ_SEED")
        .output()
        .expect("spawn vagueq")
}

pub fn stdout_value(out: &str, key: &str) -> Option<f64> {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .and_then(|v| v.trim().parse().ok())
}
