//! Command-line front end.
//!
//! Every subcommand prints `key = value` lines on stdout. Exit status is 0 on
//! success, 1 on a domain error (one line on stderr) and 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::formats::{self, format_number};
use crate::fuzzy::{FiniteFuzzySet, TNorm};
use crate::integral::{lebesgue_integral, sugeno_finite, sugeno_grid};
use crate::language::{Alphabet, FuzzyLanguage};
use crate::localize::{Localizer, WavefunctionSpec};
use crate::measures::{
    check_additivity, check_possibility_union_axiom, normalize_to_possibility, Measure,
};
use crate::quantum::{
    born_samples, defuzzify, fuzzify, parse_gate, parse_qubit, parse_two_qubit, tensor_product,
    Defuzzifier, FuzzyQubitState, Outcome, DEFAULT_ENTANGLEMENT_TOL,
};
use crate::sets::{FiniteSubset, IntervalSet};

pub const SEED_ENV: &str = "VAGUEQ_SEED";

const GRAMMAR: &str = "\
Structured flag values:
  intervals   = interval { \";\" interval } ;        interval = real \",\" real   (half-open [lo,hi))
  subset      = \"{}\" | label { \"|\" label } ;
  wavefunction= \"gaussian:\" \"mu=\" real \",\" \"sigma=\" real
              | \"box:\" \"n=\" int \",\" \"L=\" real
              | \"samples:\" \"path=\" file ;
  qubit       = \"|0>\" | \"|1>\" | \"0\" | \"1\" | \"amp \" real \",\" real \",\" real \",\" real ;
  two-qubit   = \"bell\" | \"|00>\" | \"|01>\" | \"|10>\" | \"|11>\" | \"amp \" 8 * (real \",\") ;
  gate        = \"H\" | \"X\" | \"Z\" | \"U:\" 8 * (real \",\")      (row-major re,im pairs)

Files: `label,grade` fuzzy sets, `x,value` grid CSV (with header), `e1|e2,value` measure
tables (`{}` is the empty set), `word,grade` language tables (`ε` is the empty word).
The seed comes from --seed, else the VAGUEQ_SEED environment variable, else 0.";

#[derive(Debug, Parser)]
#[command(name = "vagueq", version, about = "Fuzzy sets, possibility measures, Sugeno integrals and fuzzy qubits", after_long_help = GRAMMAR)]
struct Cli {
    /// Seed for every pseudo-random draw.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Union, intersection and complement of finite fuzzy sets.
    Fuzzy {
        #[command(subcommand)]
        op: FuzzyOp,
    },
    /// Evaluate a measure or check its axioms.
    Measure {
        #[command(subcommand)]
        op: MeasureOp,
    },
    /// Lebesgue (trapezoid) and Sugeno integrals.
    Integrate {
        #[command(subcommand)]
        op: IntegrateOp,
    },
    /// Probability and possibility of finding a particle in an interval.
    Localize(LocalizeArgs),
    /// Single-qubit states: gates, memberships, defuzzification.
    Qubit(QubitArgs),
    /// Two-qubit states: tensor products and entanglement.
    Entangle(EntangleArgs),
    /// Fuzzy languages.
    Lang {
        #[command(subcommand)]
        op: LangOp,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    /// First fuzzy set (`label,grade` file).
    #[arg(long)]
    a: PathBuf,
    /// Second fuzzy set.
    #[arg(long)]
    b: PathBuf,
    #[arg(long, default_value = "minimum")]
    tnorm: TNormArg,
    /// Also write the result as a `label,grade` file.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum FuzzyOp {
    Union(PairArgs),
    Intersect(PairArgs),
    Complement {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TNormArg {
    Minimum,
    Product,
    Lukasiewicz,
}

impl From<TNormArg> for TNorm {
    fn from(t: TNormArg) -> TNorm {
        match t {
            TNormArg::Minimum => TNorm::Minimum,
            TNormArg::Product => TNorm::Product,
            TNormArg::Lukasiewicz => TNorm::Lukasiewicz,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeasureKind {
    /// Additive measure from an `x,value` density.
    Additive,
    /// Possibility measure from an `x,value` or `label,grade` distribution.
    Possibilistic,
    /// Explicit set-function table.
    Table,
}

#[derive(Debug, Args)]
struct MeasureSource {
    #[arg(long)]
    kind: MeasureKind,
    #[arg(long)]
    file: PathBuf,
    /// Rescale a grid distribution to height 1 before use.
    #[arg(long)]
    normalize: bool,
}

#[derive(Debug, Args)]
struct RegionArgs {
    /// Interval set, e.g. `-1,1` or `0,1;2,3`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "subset")]
    interval: Option<String>,
    /// Finite subset, e.g. `a|b` or `{}`.
    #[arg(long)]
    subset: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Axiom {
    Maxitivity,
    Additivity,
    Table,
}

#[derive(Debug, Subcommand)]
enum MeasureOp {
    Eval {
        #[command(flatten)]
        source: MeasureSource,
        #[command(flatten)]
        region: RegionArgs,
    },
    Check {
        #[command(flatten)]
        source: MeasureSource,
        /// Defaults to the natural axiom of the measure kind.
        #[arg(long)]
        axiom: Option<Axiom>,
        /// One part of the family (repeatable).
        #[arg(long = "part", allow_hyphen_values = true)]
        parts: Vec<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
enum IntegrateOp {
    Lebesgue {
        /// Integrand (`x,value` grid CSV).
        #[arg(long)]
        function: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        interval: Option<String>,
    },
    Sugeno {
        /// Integrand: `x,value` grid CSV or `label,grade` fuzzy set.
        #[arg(long)]
        function: PathBuf,
        /// Measure kind; `self` uses the height-normalized integrand as a
        /// possibility distribution.
        #[arg(long)]
        kind: SugenoMeasure,
        #[arg(long, required_if_eq_any = [("kind", "additive"), ("kind", "possibilistic"), ("kind", "table")])]
        file: Option<PathBuf>,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        region: RegionArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SugenoMeasure {
    Additive,
    Possibilistic,
    Table,
    #[value(name = "self")]
    SelfPossibility,
}

#[derive(Debug, Args)]
struct LocalizeArgs {
    /// `gaussian:mu=..,sigma=..`, `box:n=..,L=..` or `samples:path=..`.
    #[arg(long)]
    wavefunction: String,
    /// The interval `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    interval: String,
    #[arg(long)]
    grid: Option<usize>,
    /// Override the sampling domain `lo,hi` (gaussians only).
    #[arg(long, allow_hyphen_values = true)]
    domain: Option<String>,
    /// Time label recorded in the report.
    #[arg(long, allow_hyphen_values = true)]
    time: Option<f64>,
    /// Write the sampled density as `x,value` CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Number of equal windows for a sweep across the domain.
    #[arg(long, requires = "sweep_csv")]
    sweep: Option<usize>,
    /// Destination of the `a,b,probability,possibility` sweep.
    #[arg(long, requires = "sweep")]
    sweep_csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QubitReport {
    Memberships,
    Amplitudes,
    Defuzzify,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Argmax,
    Born,
    Both,
}

#[derive(Debug, Args)]
struct QubitArgs {
    /// Initial amplitude state.
    #[arg(long, conflicts_with = "fuzzy")]
    init: Option<String>,
    /// A fuzzy state `mu0,mu1` given directly (no normalization required).
    #[arg(long)]
    fuzzy: Option<String>,
    /// Gate to apply, in order (repeatable).
    #[arg(long = "gate", allow_hyphen_values = true)]
    gates: Vec<String>,
    #[arg(long, default_value = "all")]
    report: QubitReport,
    #[arg(long, default_value = "both")]
    method: Method,
    /// Number of Born draws to tally.
    #[arg(long, default_value_t = 1)]
    shots: usize,
    /// Write the memberships as a `label,grade` file.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EntangleArgs {
    #[arg(long, conflicts_with_all = ["left", "right"], allow_hyphen_values = true)]
    state: Option<String>,
    #[arg(long, requires = "right", allow_hyphen_values = true)]
    left: Option<String>,
    #[arg(long, requires = "left", allow_hyphen_values = true)]
    right: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ENTANGLEMENT_TOL)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum LangOp {
    Grade {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// `word,grade` table; the built-in `0^i 1^j` language when absent.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Alphabet for a table language, e.g. `01`.
        #[arg(long)]
        alphabet: Option<String>,
        /// Take the complement before grading.
        #[arg(long)]
        complement: bool,
        /// Combine with another language (`builtin` or a table path).
        #[arg(long, conflicts_with = "intersect_with")]
        union_with: Option<String>,
        #[arg(long)]
        intersect_with: Option<String>,
    },
}

/// Accumulates `key = value` lines.
#[derive(Default)]
struct Lines(String);

impl Lines {
    fn num(&mut self, key: &str, v: f64) {
        let _ = writeln!(self.0, "{key} = {}", format_number(v));
    }

    fn text(&mut self, key: &str, v: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{key} = {v}");
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_real(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| usage(format!("`{}` is not a number", s.trim())))
}

fn parse_pair(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| usage(format!("expected `lo,hi`, got `{s}`")))?;
    Ok((parse_real(a)?, parse_real(b)?))
}

fn parse_intervals(s: &str) -> Result<IntervalSet> {
    let s = s.trim();
    if s.is_empty() || s == "{}" {
        return Ok(IntervalSet::empty());
    }
    IntervalSet::from_unsorted(s.split(';').map(parse_pair).collect::<Result<Vec<_>>>()?)
}

fn parse_subset(s: &str, universe: &crate::fuzzy::Universe) -> Result<FiniteSubset> {
    let s = s.trim();
    if s == "{}" || s.is_empty() {
        return FiniteSubset::empty(universe.len());
    }
    let labels: Vec<&str> = s.split('|').map(str::trim).collect();
    universe.subset(&labels)
}

fn parse_wavefunction(s: &str) -> Result<WavefunctionSpec> {
    let (kind, params) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("wavefunction `{s}` lacks a `kind:` prefix")))?;
    let mut fields = std::collections::BTreeMap::new();
    for kv in params.split(',').filter(|t| !t.trim().is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| usage(format!("expected `key=value`, got `{kv}`")))?;
        fields.insert(k.trim().to_string(), v.trim().to_string());
    }
    let take = |fields: &mut std::collections::BTreeMap<String, String>, key: &str| {
        fields
            .remove(key)
            .ok_or_else(|| usage(format!("wavefunction `{kind}` needs `{key}=`")))
    };
    let spec = match kind.trim() {
        "gaussian" => {
            let mu = parse_real(&take(&mut fields, "mu")?)?;
            let sigma = parse_real(&take(&mut fields, "sigma")?)?;
            WavefunctionSpec::gaussian(mu, sigma)
        }
        "box" => {
            let n = take(&mut fields, "n")?;
            let n: u32 = n
                .parse()
                .map_err(|_| usage(format!("`{n}` is not a level")))?;
            let length = parse_real(&take(&mut fields, "L")?)?;
            WavefunctionSpec::box_eigenstate(n, length)
        }
        "samples" => {
            let path = take(&mut fields, "path")?;
            WavefunctionSpec::samples(formats::parse_grid(&read(Path::new(&path))?)?)
        }
        other => return Err(usage(format!("unknown wavefunction kind `{other}`"))),
    };
    if let Some(k) = fields.keys().next() {
        return Err(usage(format!("unknown wavefunction parameter `{k}`")));
    }
    Ok(spec)
}

fn load_measure(kind: MeasureKind, file: &Path, normalize: bool) -> Result<Measure> {
    let text = read(file)?;
    match kind {
        MeasureKind::Additive => Ok(Measure::additive(formats::parse_grid(&text)?)),
        MeasureKind::Possibilistic if formats::looks_like_grid(&text) => {
            let g = formats::parse_grid(&text)?;
            let g = if normalize {
                normalize_to_possibility(&g)?
            } else {
                g
            };
            Measure::possibility_grid(g)
        }
        MeasureKind::Possibilistic => Measure::possibility_finite(formats::parse_fuzzy_set(&text)?),
        MeasureKind::Table => Ok(Measure::table(formats::parse_table_measure(&text)?)),
    }
}

fn describe_measure(out: &mut Lines, m: &Measure) {
    out.text("kind", m.kind_name());
    if let Measure::Additive(a) = m {
        out.num("mass", a.mass());
        out.text("normalized", a.is_normalized());
    }
}

fn fuzzy_set_lines(out: &mut Lines, set: &FiniteFuzzySet) {
    for (label, g) in set.iter() {
        out.num(&format!("grade[{label}]"), g.value());
    }
    if let Ok(h) = set.height() {
        out.num("height", h.value());
    }
    out.text("normalized", set.is_normalized(0.0));
}

fn cmd_fuzzy(op: FuzzyOp, out: &mut Lines) -> Result<()> {
    let load = |p: &Path| -> Result<FiniteFuzzySet> { formats::parse_fuzzy_set(&read(p)?) };
    let (result, csv) = match op {
        FuzzyOp::Union(p) => (load(&p.a)?.union(&load(&p.b)?, p.tnorm.into())?, p.csv),
        FuzzyOp::Intersect(p) => (
            load(&p.a)?.intersection(&load(&p.b)?, p.tnorm.into())?,
            p.csv,
        ),
        FuzzyOp::Complement { a, csv } => (load(&a)?.complement(), csv),
    };
    fuzzy_set_lines(out, &result);
    if let Some(path) = csv {
        write_file(&path, &formats::write_fuzzy_set(&result))?;
    }
    Ok(())
}

fn cmd_measure(op: MeasureOp, out: &mut Lines) -> Result<()> {
    match op {
        MeasureOp::Eval { source, region } => {
            let m = load_measure(source.kind, &source.file, source.normalize)?;
            describe_measure(out, &m);
            let value = match (&region.interval, &region.subset, m.universe()) {
                (Some(i), None, _) => m.of_intervals(&parse_intervals(i)?)?,
                (None, Some(s), Some(u)) => m.of_subset(&parse_subset(s, u)?)?,
                (None, Some(_), None) => {
                    return Err(Error::DomainMismatch(
                        "a grid measure needs --interval".into(),
                    ))
                }
                _ => return Err(usage("give --interval or --subset")),
            };
            out.num("measure", value);
        }
        MeasureOp::Check {
            source,
            axiom,
            parts,
            tol,
        } => {
            let m = load_measure(source.kind, &source.file, source.normalize)?;
            describe_measure(out, &m);
            let parts = parts
                .iter()
                .map(|p| parse_intervals(p))
                .collect::<Result<Vec<_>>>()?;
            let axiom = axiom.unwrap_or(match source.kind {
                MeasureKind::Additive => Axiom::Additivity,
                MeasureKind::Possibilistic => Axiom::Maxitivity,
                MeasureKind::Table => Axiom::Table,
            });
            match axiom {
                Axiom::Maxitivity => {
                    out.text("axiom", "maxitivity");
                    out.text("holds", check_possibility_union_axiom(&m, &parts)?);
                }
                Axiom::Additivity => {
                    out.text("axiom", "additivity");
                    out.text("holds", check_additivity(&m, &parts, tol)?);
                }
                Axiom::Table => {
                    if !matches!(m, Measure::Table(_)) {
                        return Err(Error::WrongMeasureKind {
                            expected: "table",
                            got: m.kind_name(),
                        });
                    }
                    // Loading already enforced the axioms.
                    out.text("axiom", "monotone");
                    out.text("holds", true);
                }
            }
        }
    }
    Ok(())
}

fn cmd_integrate(op: IntegrateOp, out: &mut Lines) -> Result<()> {
    match op {
        IntegrateOp::Lebesgue { function, interval } => {
            let f = formats::parse_grid(&read(&function)?)?;
            let set = match interval {
                Some(i) => parse_intervals(&i)?,
                None => IntervalSet::interval(f.x_min(), f.x_max())?,
            };
            out.num("integral", lebesgue_integral(&f, &set)?);
        }
        IntegrateOp::Sugeno {
            function,
            kind,
            file,
            normalize,
            region,
        } => {
            let text = read(&function)?;
            if formats::looks_like_grid(&text) {
                let f = formats::parse_grid(&text)?;
                let m = match kind {
                    SugenoMeasure::SelfPossibility => {
                        Measure::possibility_grid(normalize_to_possibility(&f)?)?
                    }
                    SugenoMeasure::Additive => {
                        load_measure(MeasureKind::Additive, file.as_deref().unwrap(), normalize)?
                    }
                    SugenoMeasure::Possibilistic => load_measure(
                        MeasureKind::Possibilistic,
                        file.as_deref().unwrap(),
                        normalize,
                    )?,
                    SugenoMeasure::Table => {
                        return Err(Error::DomainMismatch(
                            "table measures live on finite universes".into(),
                        ))
                    }
                };
                if region.subset.is_some() {
                    return Err(Error::DomainMismatch(
                        "a grid integrand needs --interval".into(),
                    ));
                }
                let set = match region.interval {
                    Some(i) => parse_intervals(&i)?,
                    None => IntervalSet::interval(f.x_min(), f.x_max())?,
                };
                let est = sugeno_grid(&f, &set, &m)?;
                out.text("kind", m.kind_name());
                out.num("sugeno", est.value);
                out.num("tolerance", est.tolerance);
            } else {
                let f = formats::parse_fuzzy_set(&text)?;
                let m = match kind {
                    SugenoMeasure::SelfPossibility => {
                        let h = f.height()?.value();
                        if h <= 0.0 {
                            return Err(Error::ZeroFunction);
                        }
                        let scaled = f
                            .grades()
                            .iter()
                            .map(|g| crate::fuzzy::Grade::saturating(g.value() / h))
                            .collect();
                        Measure::possibility_finite(FiniteFuzzySet::new(
                            f.universe().clone(),
                            scaled,
                        )?)?
                    }
                    SugenoMeasure::Possibilistic => load_measure(
                        MeasureKind::Possibilistic,
                        file.as_deref().unwrap(),
                        normalize,
                    )?,
                    SugenoMeasure::Table => {
                        let t = formats::parse_table_measure(&read(file.as_deref().unwrap())?)?;
                        Measure::table(t.reordered(f.universe())?)
                    }
                    SugenoMeasure::Additive => {
                        return Err(Error::DomainMismatch(
                            "additive measures live on the real line".into(),
                        ))
                    }
                };
                if region.interval.is_some() {
                    return Err(Error::DomainMismatch(
                        "a finite integrand needs --subset".into(),
                    ));
                }
                let a = match region.subset {
                    Some(s) => parse_subset(&s, f.universe())?,
                    None => f.universe().full()?,
                };
                out.text("kind", m.kind_name());
                out.num("sugeno", sugeno_finite(&f, &a, &m)?);
            }
        }
    }
    Ok(())
}

fn cmd_localize(args: LocalizeArgs, out: &mut Lines) -> Result<()> {
    let mut spec = parse_wavefunction(&args.wavefunction)?;
    if let Some(n) = args.grid {
        spec = spec.with_grid(n);
    }
    if let Some(d) = &args.domain {
        let (lo, hi) = parse_pair(d)?;
        spec = spec.with_domain(lo, hi);
    }
    if let Some(t) = args.time {
        spec = spec.at_time(t);
    }
    let (a, b) = parse_pair(&args.interval)?;
    let loc = Localizer::new(&spec)?;
    let r = loc.report(a, b)?;
    out.num("a", r.interval.0);
    out.num("b", r.interval.1);
    if let Some(t) = r.time {
        out.num("time", t);
    }
    out.num("probability", r.probability);
    out.num("possibility", r.possibility);
    out.num("possibility_sugeno", r.possibility_sugeno);
    out.num("density_norm", r.density_norm);
    out.num("grid_tolerance", r.grid_tolerance);
    if let Some(path) = args.csv {
        write_file(&path, &formats::write_grid(loc.density()))?;
    }
    if let (Some(n), Some(path)) = (args.sweep, args.sweep_csv) {
        if n == 0 {
            return Err(usage("--sweep needs at least one window"));
        }
        let mut csv = String::from("a,b,probability,possibility\n");
        for row in loc.sweep(n)? {
            let _ = writeln!(
                csv,
                "{},{},{},{}",
                row.interval.0, row.interval.1, row.probability, row.possibility
            );
        }
        write_file(&path, &csv)?;
    }
    Ok(())
}

fn cmd_qubit(args: QubitArgs, seed: u64, out: &mut Lines) -> Result<()> {
    let (fuzzy, state) = match (&args.fuzzy, &args.init) {
        (Some(f), _) => {
            if !args.gates.is_empty() {
                return Err(Error::DomainMismatch(
                    "gates act on amplitude states, not on fuzzy states".into(),
                ));
            }
            let (mu0, mu1) = parse_pair(f)?;
            (FuzzyQubitState::new(mu0, mu1)?, None)
        }
        (None, init) => {
            let mut s = parse_qubit(init.as_deref().unwrap_or("|0>"))?;
            for g in &args.gates {
                s = s.apply(&parse_gate(g)?);
            }
            (fuzzify(&s), Some(s))
        }
    };
    let show = |r: QubitReport| args.report == r || args.report == QubitReport::All;
    if show(QubitReport::Amplitudes) {
        if let Some(s) = state {
            let [a0, a1] = s.amplitudes();
            out.num("a0.re", a0.re);
            out.num("a0.im", a0.im);
            out.num("a1.re", a1.re);
            out.num("a1.im", a1.im);
            out.num("norm", s.norm_sqr());
        }
    }
    if show(QubitReport::Memberships) {
        out.num("mu0", fuzzy.mu0().value());
        out.num("mu1", fuzzy.mu1().value());
        out.text("born_compatible", fuzzy.is_born_compatible());
    }
    if show(QubitReport::Defuzzify) {
        if matches!(args.method, Method::Argmax | Method::Both) {
            out.text("argmax", defuzzify(&fuzzy, Defuzzifier::Argmax, seed)?);
        }
        if matches!(args.method, Method::Born | Method::Both) {
            let draws = born_samples(&fuzzy, args.shots.max(1), seed)?;
            out.text("born", draws[0]);
            if args.shots > 1 {
                let zeros = draws.iter().filter(|&&o| o == Outcome::Zero).count();
                out.text("shots", args.shots);
                out.num("born_frequency0", zeros as f64 / args.shots as f64);
            }
        }
        out.text("seed", seed);
    }
    if let Some(path) = args.csv {
        write_file(&path, &formats::write_fuzzy_set(&fuzzy.to_fuzzy_set()))?;
    }
    Ok(())
}

fn cmd_entangle(args: EntangleArgs, out: &mut Lines) -> Result<()> {
    let state = match (&args.state, &args.left, &args.right) {
        (Some(s), _, _) => parse_two_qubit(s)?,
        (None, Some(l), Some(r)) => tensor_product(&parse_qubit(l)?, &parse_qubit(r)?),
        _ => return Err(usage("give --state or both --left and --right")),
    };
    for (label, a) in ["00", "01", "10", "11"].iter().zip(state.amplitudes()) {
        out.num(&format!("amp{label}.re"), a.re);
        out.num(&format!("amp{label}.im"), a.im);
    }
    out.num("det_abs", state.determinant().norm());
    out.text("entangled", state.is_entangled(args.tol));
    Ok(())
}

fn load_language(source: &str, alphabet: Option<&Alphabet>) -> Result<FuzzyLanguage> {
    if source == "builtin" {
        return Ok(FuzzyLanguage::ZerosThenOnes);
    }
    formats::parse_language_table(&read(Path::new(source))?, alphabet.cloned())
}

fn cmd_lang(op: LangOp, out: &mut Lines) -> Result<()> {
    let LangOp::Grade {
        word,
        table,
        alphabet,
        complement,
        union_with,
        intersect_with,
    } = op;
    let alphabet = alphabet.map(|a| Alphabet::new(a.chars()));
    let mut lang = match &table {
        Some(p) => formats::parse_language_table(&read(p)?, alphabet.clone())?,
        None => FuzzyLanguage::ZerosThenOnes,
    };
    if complement {
        lang = lang.complement();
    }
    if let Some(other) = union_with {
        lang = lang.union(load_language(&other, alphabet.as_ref())?)?;
    }
    if let Some(other) = intersect_with {
        lang = lang.intersection(load_language(&other, alphabet.as_ref())?)?;
    }
    out.num("grade", lang.grade(&word)?.value());
    Ok(())
}

fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{SEED_ENV}=`{v}` is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn dispatch(cli: Cli, out: &mut Lines) -> Result<()> {
    let seed = match cli.seed {
        Some(s) => s,
        None => seed_from_env()?,
    };
    match cli.command {
        Command::Fuzzy { op } => cmd_fuzzy(op, out),
        Command::Measure { op } => cmd_measure(op, out),
        Command::Integrate { op } => cmd_integrate(op, out),
        Command::Localize(args) => cmd_localize(args, out),
        Command::Qubit(args) => cmd_qubit(args, seed, out),
        Command::Entangle(args) => cmd_entangle(args, out),
        Command::Lang { op } => cmd_lang(op, out),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let rendered = e.render().to_string();
                    let _ = write!(stderr, "{rendered}");
                    if !rendered.contains("Usage:") {
                        use clap::CommandFactory;
                        let _ = writeln!(stderr, "\n{}", Cli::command().render_usage());
                    }
                    2
                }
            };
        }
    };
    let mut out = Lines::default();
    match dispatch(cli, &mut out) {
        Ok(()) => {
            let _ = stdout.write_all(out.0.as_bytes());
            let _ = stdout.flush();
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
