//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any FAIL.

mod common;

use std::time::Instant;

use common::*;
use num_complex::Complex64;
use num_rational::Ratio;
use rand::Rng;

use vagueq::error::Error;
use vagueq::language::zeros_then_ones_grade;
use vagueq::measures::{check_additivity, check_possibility_union_axiom, normalize_to_possibility};
use vagueq::quantum::{
    apply_hadamard, born_samples, fuzzify, tensor_product, DEFAULT_ENTANGLEMENT_TOL,
};
use vagueq::{
    sugeno_finite, sugeno_grid, FiniteFuzzySet, FuzzyLanguage, Grade, GridFunction, IntervalSet,
    Localizer, Measure, QubitState, TNorm, TableMeasure, TwoQubitState, WavefunctionSpec,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaussian_localization() -> Check {
    let start = Instant::now();
    let loc = Localizer::new(&WavefunctionSpec::gaussian(0.0, 1.0).with_grid(10001))
        .map_err(|e| e.to_string())?;
    let r = loc.report(-1.0, 1.0).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    let oracle = simpson(std_normal_pdf, -1.0, 1.0, 5000);
    ensure((oracle - ERF_ONE_OVER_SQRT2).abs() < 1e-12, || {
        format!("simpson oracle {oracle}")
    })?;
    let err = (r.probability - oracle).abs();
    ensure(err < 1e-4, || {
        format!("probability {} vs {oracle}", r.probability)
    })?;
    ensure(elapsed < 1.0, || format!("took {elapsed:.3} s"))?;
    Ok(format!(
        "probability {:.9}, |err| {err:.1e}, {elapsed:.3} s",
        r.probability
    ))
}

fn plausible_event_law() -> Check {
    let mut r = rng(101);
    let mut worst = 0.0f64;
    for k in 0..50 {
        let (mu, sigma) = if k % 2 == 0 {
            (0.0, 1.0)
        } else {
            (r.gen_range(-3.0..3.0), r.gen_range(0.2..2.0))
        };
        let loc =
            Localizer::new(&WavefunctionSpec::gaussian(mu, sigma)).map_err(|e| e.to_string())?;
        let (lo, hi) = (loc.density().x_min(), loc.density().x_max());
        let a = r.gen_range(lo..mu);
        let b = r.gen_range(mu + 1e-9..=hi);
        let rep = loc.report(a, b).map_err(|e| e.to_string())?;
        worst = worst.max((rep.possibility - 1.0).abs());
    }
    ensure(worst <= 1e-9, || format!("max |Π - 1| = {worst:e}"))?;
    Ok(format!("50 intervals, max |Π - 1| = {worst:.1e}"))
}

fn sugeno_oracle_equivalence() -> Check {
    let mut r = rng(102);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let n = r.gen_range(1..=8);
        let u = labels(n);
        let f = random_set(&mut r, &u);
        let fv: Vec<f64> = f.grades().iter().map(|g| g.value()).collect();
        let a_mask = r.gen_range(0..1usize << n);
        let (m, expect) = if r.gen_bool(0.5) {
            let mu = random_monotone_values(&mut r, n);
            let e = sugeno_scan(&fv, a_mask, |s| mu[s], 2000);
            (Measure::table(table_from_values(&u, &mu)), e)
        } else {
            let pi = random_possibility(&mut r, &u);
            let e = sugeno_scan(&fv, a_mask, |s| possibility_of_mask(&pi, s), 2000);
            let set = FiniteFuzzySet::new(
                u.clone(),
                pi.iter().map(|&p| Grade::new(p).unwrap()).collect(),
            )
            .unwrap();
            (
                Measure::possibility_finite(set).map_err(|e| e.to_string())?,
                e,
            )
        };
        let got = sugeno_finite(&f, &subset(n, a_mask), &m).map_err(|e| e.to_string())?;
        worst = worst.max((got - expect).abs());
    }
    ensure(worst < 1e-6, || format!("max deviation {worst:e}"))?;
    let f = FiniteFuzzySet::from_pairs([("x1", 0.2), ("x2", 0.5), ("x3", 0.9)]).unwrap();
    let pi = FiniteFuzzySet::from_pairs([("x1", 1.0), ("x2", 0.6), ("x3", 0.3)]).unwrap();
    let m = Measure::possibility_finite(pi).map_err(|e| e.to_string())?;
    let worked = sugeno_finite(&f, &f.universe().full().unwrap(), &m).map_err(|e| e.to_string())?;
    ensure(worked == 0.5, || format!("worked instance gave {worked}"))?;
    Ok(format!(
        "500 instances, max deviation {worst:.1e}; worked instance = {worked}"
    ))
}

fn sugeno_fixed_point() -> Check {
    let mut r = rng(103);
    let pi = normalize_to_possibility(
        &GridFunction::from_fn(-6.0, 6.0, 4001, |x| {
            (-(x + 1.5) * (x + 1.5)).exp() * 0.7 + (-(x - 2.0) * (x - 2.0) * 3.0).exp()
        })
        .unwrap(),
    )
    .unwrap();
    let m = Measure::possibility_grid(pi.clone()).map_err(|e| e.to_string())?;
    let mut worst_ratio = 0.0f64;
    for _ in 0..200 {
        let a = r.gen_range(-6.0..5.9);
        let b = r.gen_range(a + 1e-3..=6.0);
        let set = IntervalSet::interval(a, b).unwrap();
        let est = sugeno_grid(&pi, &set, &m).map_err(|e| e.to_string())?;
        let target = m.of_intervals(&set).map_err(|e| e.to_string())?;
        let dev = (est.value - target).abs();
        ensure(dev <= est.tolerance, || {
            format!("[{a},{b}): {} vs {target}", est.value)
        })?;
        worst_ratio = worst_ratio.max(dev / est.tolerance);
    }
    Ok(format!(
        "200 intervals, max deviation/tolerance {worst_ratio:.2}"
    ))
}

fn measure_axioms() -> Check {
    let mut r = rng(104);
    let density = GridFunction::from_fn(-5.0, 5.0, 2001, std_normal_pdf).unwrap();
    let pi = Measure::possibility_grid(normalize_to_possibility(&density).unwrap()).unwrap();
    let p = Measure::additive(density);
    let interval = |r: &mut rand_chacha::ChaCha8Rng| {
        let a = r.gen_range(-5.0..4.99);
        IntervalSet::interval(a, r.gen_range(a + 1e-3..=5.0)).unwrap()
    };
    for _ in 0..50 {
        let parts: Vec<IntervalSet> = (0..r.gen_range(2..6)).map(|_| interval(&mut r)).collect();
        ensure(
            check_possibility_union_axiom(&pi, &parts).map_err(|e| e.to_string())?,
            || format!("maxitivity failed for {parts:?}"),
        )?;
    }
    for _ in 0..100 {
        let mut c: Vec<f64> = (0..4).map(|_| r.gen_range(-5.0..5.0)).collect();
        c.sort_by(f64::total_cmp);
        let parts: Vec<IntervalSet> = c
            .windows(2)
            .filter(|w| w[1] > w[0])
            .map(|w| IntervalSet::interval(w[0], w[1]).unwrap())
            .collect();
        ensure(
            check_additivity(&p, &parts, 1e-6).map_err(|e| e.to_string())?,
            || format!("additivity failed for {parts:?}"),
        )?;
    }
    for _ in 0..500 {
        let outer = interval(&mut r);
        let (a, b) = outer.bounds().unwrap();
        let c = r.gen_range(a..b);
        let inner = IntervalSet::interval(c, r.gen_range(c..b).max(c + (b - c) * 1e-3)).unwrap();
        for m in [&pi, &p] {
            let (x, y) = (
                m.of_intervals(&inner).unwrap(),
                m.of_intervals(&outer).unwrap(),
            );
            ensure(x <= y + 1e-12, || format!("{}: {x} > {y}", m.kind_name()))?;
        }
        let n = r.gen_range(1..=6);
        let mu = random_monotone_values(&mut r, n);
        let t = table_from_values(&labels(n), &mu);
        let big = r.gen_range(0..1usize << n);
        let small = big & r.gen_range(0..1usize << n);
        ensure(
            t.value(&subset(n, small)) <= t.value(&subset(n, big)) + 1e-12,
            || "table monotonicity".into(),
        )?;
    }
    let mut rejected = 0;
    for _ in 0..100 {
        let n = r.gen_range(3..=6);
        let full = (1usize << n) - 1;
        let mut mu = random_monotone_values(&mut r, n);
        let small = 1usize << r.gen_range(0..n);
        let extra = loop {
            let b = 1usize << r.gen_range(0..n);
            if b != small {
                break b;
            }
        };
        let big = small | extra;
        ensure(big != full, || "degenerate draw".into())?;
        mu[small] = (mu[big] + 1.0) / 2.0;
        let u = labels(n);
        match TableMeasure::from_fn(u, |s| mu[s.mask() as usize]) {
            Err(Error::NotMonotone { .. }) => rejected += 1,
            other => return Err(format!("non-monotone table accepted: {other:?}")),
        }
    }
    Ok(format!("50 maxitivity families, 100 additive splits, 500 nested pairs, {rejected}/100 bad tables rejected"))
}

fn quantum_identities() -> Check {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let close = |a: Complex64, b: f64| (a - Complex64::new(b, 0.0)).norm() < 1e-12;
    let h0 = apply_hadamard(&QubitState::ket0());
    let h1 = apply_hadamard(&QubitState::ket1());
    ensure(close(h0.a0(), h) && close(h0.a1(), h), || {
        format!("H|0> = {:?}", h0.amplitudes())
    })?;
    ensure(close(h1.a0(), h) && close(h1.a1(), -h), || {
        format!("H|1> = {:?}", h1.amplitudes())
    })?;
    let mut r = rng(105);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let s = random_qubit(&mut r);
        let back = apply_hadamard(&apply_hadamard(&s));
        worst = worst
            .max((back.a0() - s.a0()).norm())
            .max((back.a1() - s.a1()).norm());
    }
    ensure(worst < 1e-12, || format!("HH deviation {worst:e}"))?;
    let f = fuzzify(&h0);
    ensure(
        (f.mu0().value() - 0.5).abs() < 1e-12 && (f.mu1().value() - 0.5).abs() < 1e-12,
        || format!("fuzzify(H|0>) = ({}, {})", f.mu0(), f.mu1()),
    )?;
    Ok(format!(
        "H|0>, H|1> exact; HH max deviation {worst:.1e}; fuzzify(H|0>) = (0.5, 0.5)"
    ))
}

fn entanglement_detector() -> Check {
    let bell = TwoQubitState::bell();
    let det = bell.determinant().norm();
    ensure((det - 0.5).abs() < 1e-12, || format!("|det| = {det}"))?;
    ensure(bell.is_entangled(DEFAULT_ENTANGLEMENT_TOL), || {
        "bell not flagged".into()
    })?;
    let mut r = rng(106);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let t = tensor_product(&random_qubit(&mut r), &random_qubit(&mut r));
        worst = worst.max(t.determinant().norm());
        ensure(!t.is_entangled(1e-10), || {
            format!("product state flagged, |det| = {worst:e}")
        })?;
    }
    Ok(format!(
        "bell |det| = {det}; 1000 product states clear, max |det| {worst:.1e}"
    ))
}

fn born_sampling() -> Check {
    let s = vagueq::FuzzyQubitState::new(0.5, 0.5).map_err(|e| e.to_string())?;
    let draws = born_samples(&s, 100_000, 20261016).map_err(|e| e.to_string())?;
    let freq = draws.iter().filter(|o| o.bit() == 0).count() as f64 / draws.len() as f64;
    ensure((0.494..=0.506).contains(&freq), || {
        format!("frequency {freq}")
    })?;
    Ok(format!("frequency of 0 over 100000 draws = {freq:.5}"))
}

fn fuzzy_language() -> Check {
    let l = FuzzyLanguage::ZerosThenOnes;
    let mut count = 0;
    for i in 1..=30usize {
        for j in 1..=30usize {
            if i == j {
                continue;
            }
            let w = format!("{}{}", "0".repeat(i), "1".repeat(j));
            let g = zeros_then_ones_grade(&w);
            let (lo, hi) = (i.min(j) as u64, i.max(j) as u64);
            // Cross-multiplied comparison, independent of reduction.
            ensure(g.numer() * hi == g.denom() * lo, || format!("{w}: {g}"))?;
            ensure(g == Ratio::new(lo, hi), || format!("{w}: {g}"))?;
            ensure(
                l.grade(&w).unwrap().value() == lo as f64 / hi as f64,
                || format!("{w}: float grade"),
            )?;
            count += 1;
        }
    }
    let out = run_cli(&["lang", "grade", "--word", "00111"]);
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(
        out.status.success() && text == "grade = 0.666666667\n",
        || format!("CLI printed {text:?}"),
    )?;
    Ok(format!("{count} words exact; CLI `grade = 0.666666667`"))
}

fn fuzzy_algebra() -> Check {
    let mut r = rng(107);
    let t = TNorm::Minimum;
    for _ in 0..1000 {
        let u = labels(r.gen_range(1..16));
        let (a, b) = (random_dyadic_set(&mut r, &u), random_dyadic_set(&mut r, &u));
        let ok = a.union(&b, t).unwrap().complement()
            == a.complement().intersection(&b.complement(), t).unwrap()
            && a.intersection(&b, t).unwrap().complement()
                == a.complement().union(&b.complement(), t).unwrap()
            && a.union(&a, t).unwrap() == a
            && a.intersection(&a, t).unwrap() == a
            && a.complement().complement() == a;
        ensure(ok, || format!("law violated for {a:?}, {b:?}"))?;
    }
    Ok("1000 pairs: De Morgan, idempotence, involution exact".into())
}

fn cli_determinism() -> Check {
    let examples: [&[&str]; 4] = [
        &[
            "localize",
            "--wavefunction",
            "gaussian:mu=0,sigma=1",
            "--interval",
            "-1,1",
            "--grid",
            "10001",
        ],
        &[
            "qubit",
            "--init",
            "0",
            "--gate",
            "H",
            "--report",
            "memberships",
        ],
        &["lang", "grade", "--word", "00111"],
        &[
            "qubit",
            "--init",
            "0",
            "--gate",
            "H",
            "--report",
            "defuzzify",
            "--shots",
            "1000",
            "--seed",
            "9",
        ],
    ];
    for args in examples {
        let runs: Vec<_> = (0..3).map(|_| run_cli(args)).collect();
        ensure(runs[0].status.success(), || format!("{args:?} failed"))?;
        ensure(
            runs.iter()
                .all(|o| o.stdout == runs[0].stdout && o.status == runs[0].status),
            || format!("{args:?} differs between runs"),
        )?;
    }
    let loc = String::from_utf8(run_cli(examples[0]).stdout).unwrap();
    let p = stdout_value(&loc, "probability").unwrap_or(f64::NAN);
    ensure(
        (p - ERF_ONE_OVER_SQRT2).abs() < 1e-4 && loc.contains("possibility = 1.000000000\n"),
        || loc.clone(),
    )?;
    let q = String::from_utf8(run_cli(examples[1]).stdout).unwrap();
    ensure(
        q.contains("mu0 = 0.500000000\n") && q.contains("mu1 = 0.500000000\n"),
        || q.clone(),
    )?;
    Ok(format!(
        "{} examples x 3 runs byte-identical",
        examples.len()
    ))
}

fn main() {
    let checks: [Criterion; 11] = [
        ("gaussian localization", gaussian_localization),
        ("plausible-event law", plausible_event_law),
        ("sugeno oracle equivalence", sugeno_oracle_equivalence),
        ("sugeno fixed point", sugeno_fixed_point),
        ("measure axioms", measure_axioms),
        ("quantum identities", quantum_identities),
        ("entanglement detector", entanglement_detector),
        ("born-sample defuzzification", born_sampling),
        ("fuzzy language", fuzzy_language),
        ("fuzzy algebra", fuzzy_algebra),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
