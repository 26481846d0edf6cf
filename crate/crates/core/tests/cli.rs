mod common;

use std::fs;
use std::process::Command;

use common::*;

fn ok(args: &[&str]) -> String {
    let o = run_cli(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn code(args: &[&str]) -> (i32, String) {
    let o = run_cli(args);
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    let out = ok(&[
        "localize",
        "--wavefunction",
        "gaussian:mu=0,sigma=1",
        "--interval",
        "-1,1",
        "--grid",
        "10001",
    ]);
    assert!((stdout_value(&out, "probability").unwrap() - ERF_ONE_OVER_SQRT2).abs() < 1e-4);
    assert!(out.contains("possibility = 1.000000000\n"));
    let out = ok(&[
        "qubit",
        "--init",
        "0",
        "--gate",
        "H",
        "--report",
        "memberships",
    ]);
    assert!(out.contains("mu0 = 0.500000000\n") && out.contains("mu1 = 0.500000000\n"));
    assert_eq!(
        ok(&["lang", "grade", "--word", "00111"]),
        "grade = 0.666666667\n"
    );
}

#[test]
fn fuzzy_ops_read_and_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    let c = dir.path().join("c.txt");
    fs::write(&a, "p,0.25\nq,1\n").unwrap();
    fs::write(&b, "p,0.5\nq,0.5\n").unwrap();
    let (a, b, c) = (
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        c.to_str().unwrap(),
    );
    let out = ok(&["fuzzy", "union", "--a", a, "--b", b, "--csv", c]);
    assert!(out.contains("grade[p] = 0.500000000\n"));
    assert!(out.contains("grade[q] = 1.000000000\n"));
    assert!(out.contains("normalized = true\n"));
    assert_eq!(
        fs::read_to_string(c).unwrap(),
        "# label,grade\np,0.5\nq,1\n"
    );
    let out = ok(&[
        "fuzzy",
        "intersect",
        "--a",
        a,
        "--b",
        b,
        "--tnorm",
        "product",
    ]);
    assert!(out.contains("grade[p] = 0.125000000\n"));
    let out = ok(&["fuzzy", "complement", "--a", a]);
    assert!(out.contains("grade[p] = 0.750000000\n"));
    let (status, err) = code(&["fuzzy", "union", "--a", a, "--b", "/nonexistent/b.txt"]);
    assert_eq!(status, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn measure_and_integrate_commands() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.csv");
    fs::write(&tri, "x,value\n0,0\n1,1\n2,0\n").unwrap();
    let table = dir.path().join("t.txt");
    fs::write(&table, "{},0\na,0.3\nb,0.5\na|b,1\n").unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(
        &bad,
        "{},0\na,0.9\nb,0.5\na|b,1\nc,0.1\na|c,0.8\nb|c,0.6\na|b|c,1\n",
    )
    .unwrap();
    let f = dir.path().join("f.txt");
    fs::write(&f, "x1,0.2\nx2,0.5\nx3,0.9\n").unwrap();
    let pi = dir.path().join("pi.txt");
    fs::write(&pi, "x1,1\nx2,0.6\nx3,0.3\n").unwrap();
    let p = |x: &std::path::Path| x.to_str().unwrap().to_string();

    let out = ok(&[
        "measure",
        "eval",
        "--kind",
        "possibilistic",
        "--file",
        &p(&tri),
        "--interval",
        "0,0.5",
    ]);
    assert!(out.contains("measure = 0.500000000\n"), "{out}");
    let out = ok(&[
        "measure",
        "eval",
        "--kind",
        "additive",
        "--file",
        &p(&tri),
        "--interval",
        "0,2",
    ]);
    assert!(out.contains("measure = 1.000000000\n") && out.contains("normalized = true\n"));
    let out = ok(&[
        "measure",
        "eval",
        "--kind",
        "table",
        "--file",
        &p(&table),
        "--subset",
        "b",
    ]);
    assert!(out.contains("measure = 0.500000000\n"));
    let out = ok(&[
        "measure",
        "check",
        "--kind",
        "possibilistic",
        "--file",
        &p(&tri),
        "--part",
        "0,0.5",
        "--part",
        "1.5,2",
    ]);
    assert!(out.contains("holds = true\n"));
    let out = ok(&[
        "measure",
        "check",
        "--kind",
        "additive",
        "--file",
        &p(&tri),
        "--part",
        "0,0.7",
        "--part",
        "0.7,1.3",
        "--part",
        "1.3,2",
    ]);
    assert!(out.contains("holds = true\n"));
    assert_eq!(
        code(&["measure", "check", "--kind", "table", "--file", &p(&bad)]).0,
        1
    );

    let out = ok(&[
        "integrate",
        "lebesgue",
        "--function",
        &p(&tri),
        "--interval",
        "0.5,1.5",
    ]);
    assert!(out.contains("integral = 0.750000000\n"));
    let out = ok(&[
        "integrate",
        "sugeno",
        "--function",
        &p(&f),
        "--kind",
        "possibilistic",
        "--file",
        &p(&pi),
    ]);
    assert!(out.contains("sugeno = 0.500000000\n"), "{out}");
    let out = ok(&[
        "integrate",
        "sugeno",
        "--function",
        &p(&tri),
        "--kind",
        "self",
        "--interval",
        "1.5,2",
    ]);
    assert!(out.contains("sugeno = 0.500000000\n"), "{out}");
}

#[test]
fn localize_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rho.csv");
    let sweep = dir.path().join("sweep.csv");
    let out = ok(&[
        "localize",
        "--wavefunction",
        "box:n=2,L=1",
        "--interval",
        "0.1,0.4",
        "--grid",
        "2001",
        "--csv",
        csv.to_str().unwrap(),
        "--sweep",
        "4",
        "--sweep-csv",
        sweep.to_str().unwrap(),
    ]);
    let spec = format!("samples:path={}", csv.display());
    let again = ok(&["localize", "--wavefunction", &spec, "--interval", "0.1,0.4"]);
    for key in [
        "probability",
        "possibility",
        "possibility_sugeno",
        "density_norm",
    ] {
        let (x, y) = (
            stdout_value(&out, key).unwrap(),
            stdout_value(&again, key).unwrap(),
        );
        assert!((x - y).abs() < 1e-9, "{key}: {x} vs {y}");
    }
    let rows = fs::read_to_string(&sweep).unwrap();
    assert!(rows.starts_with("a,b,probability,possibility\n"));
    assert_eq!(rows.lines().count(), 5);
}

#[test]
fn localize_time_label_and_errors() {
    let out = ok(&[
        "localize",
        "--wavefunction",
        "gaussian:mu=1,sigma=0.5",
        "--interval",
        "0,2",
        "--time",
        "3",
    ]);
    assert!(out.contains("time = 3.000000000\n"));
    assert_eq!(
        code(&[
            "localize",
            "--wavefunction",
            "gaussian:mu=0,sigma=-1",
            "--interval",
            "0,1"
        ])
        .0,
        1
    );
    assert_eq!(
        code(&[
            "localize",
            "--wavefunction",
            "gaussian:mu=0,sigma=1",
            "--interval",
            "1,0"
        ])
        .0,
        1
    );
    assert_eq!(
        code(&[
            "localize",
            "--wavefunction",
            "gaussian:mu=0,sigma=1",
            "--interval",
            "0,1",
            "--grid",
            "50"
        ])
        .0,
        1
    );
    assert_eq!(code(&["localize", "--interval", "0,1"]).0, 2);
}

#[test]
fn qubit_and_entangle_commands() {
    let out = ok(&[
        "qubit",
        "--init",
        "1",
        "--gate",
        "H",
        "--report",
        "amplitudes",
    ]);
    assert!(
        out.contains("a0.re = 0.707106781\n") && out.contains("a1.re = -0.707106781\n"),
        "{out}"
    );
    let out = ok(&[
        "qubit",
        "--fuzzy",
        "0.2,0.9",
        "--report",
        "defuzzify",
        "--method",
        "argmax",
    ]);
    assert!(out.contains("argmax = 1\n"));
    assert_eq!(code(&["qubit", "--fuzzy", "0.2,0.9", "--gate", "H"]).0, 1);
    assert_eq!(code(&["qubit", "--init", "amp 1,0,1,0"]).0, 1);
    let out = ok(&["entangle", "--state", "bell"]);
    assert!(out.contains("det_abs = 0.500000000\n") && out.contains("entangled = true\n"));
    let out = ok(&["entangle", "--left", "0", "--right", "1"]);
    assert!(out.contains("entangled = false\n"));
}

#[test]
fn seed_flag_and_environment() {
    let args = [
        "qubit",
        "--init",
        "0",
        "--gate",
        "H",
        "--report",
        "defuzzify",
        "--shots",
        "1000",
    ];
    let with_flag = |seed: &str| {
        let mut a = args.to_vec();
        a.extend(["--seed", seed]);
        ok(&a)
    };
    let env_run = |seed: &str| {
        let o = Command::new(vagueq_bin())
            .args(args)
            .env("VAGUEQ_SEED", seed)
            .output()
            .unwrap();
        String::from_utf8(o.stdout).unwrap()
    };
    assert_eq!(with_flag("7"), env_run("7"));
    assert_eq!(ok(&args), with_flag("0"));
    assert_ne!(with_flag("7"), with_flag("8"));
    let o = Command::new(vagueq_bin())
        .args(args)
        .env("VAGUEQ_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lang_tables_and_combinators() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("l.txt");
    fs::write(&t, "ε,0.4\n0001,0.9\n").unwrap();
    let t = t.to_str().unwrap();
    assert_eq!(
        ok(&[
            "lang",
            "grade",
            "--word",
            "",
            "--table",
            t,
            "--alphabet",
            "01"
        ]),
        "grade = 0.400000000\n"
    );
    assert_eq!(
        ok(&[
            "lang",
            "grade",
            "--word",
            "0001",
            "--table",
            t,
            "--alphabet",
            "01",
            "--intersect-with",
            "builtin"
        ]),
        "grade = 0.333333333\n"
    );
    assert_eq!(
        ok(&["lang", "grade", "--word", "0001", "--complement"]),
        "grade = 0.666666667\n"
    );
    let (status, err) = code(&["lang", "grade", "--word", "0a1"]);
    assert_eq!(status, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn usage_errors() {
    for args in [
        &["bogus"][..],
        &["fuzzy"],
        &["qubit", "--report", "nonsense"],
        &["measure", "eval"],
    ] {
        let (status, err) = code(args);
        assert_eq!(status, 2, "{args:?}");
        assert!(err.contains("Usage"), "{err}");
    }
    let o = run_cli(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().contains("gaussian:"));
}
