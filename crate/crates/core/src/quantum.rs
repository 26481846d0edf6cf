//! One- and two-qubit statevectors read through fuzzy membership.
//!
//! A qubit `α|0⟩ + β|1⟩` induces the fuzzy set `Ψ(|0⟩) = |α|²`,
//! `Ψ(|1⟩) = |β|²` ([`fuzzify`]). Fuzzy qubit states may also be built
//! directly without the normalization condition; they only take part in
//! fuzzy-side operations and are never mapped back to amplitudes.
//! Measurement is modelled as defuzzification ([`defuzzify`]).

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fuzzy::{FiniteFuzzySet, Grade, Universe};

pub type Amplitude = Complex64;

/// Normalization slack for statevectors and unitarity checks.
pub const NORM_TOLERANCE: f64 = 1e-9;
/// Default threshold on `|det M|` for [`TwoQubitState::is_entangled`].
pub const DEFAULT_ENTANGLEMENT_TOL: f64 = 1e-10;
/// Memberships closer than this are a tie for argmax defuzzification.
pub const TIE_TOLERANCE: f64 = 1e-12;

fn check_finite(amps: &[Amplitude]) -> Result<()> {
    if amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NotNormalized(f64::NAN))
    }
}

fn check_norm(amps: &[Amplitude]) -> Result<()> {
    check_finite(amps)?;
    let n: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if (n - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized(n));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    a0: Amplitude,
    a1: Amplitude,
}

impl QubitState {
    pub fn new(a0: Amplitude, a1: Amplitude) -> Result<Self> {
        check_norm(&[a0, a1])?;
        Ok(QubitState { a0, a1 })
    }

    pub fn ket0() -> Self {
        QubitState {
            a0: Amplitude::new(1.0, 0.0),
            a1: Amplitude::new(0.0, 0.0),
        }
    }

    pub fn ket1() -> Self {
        QubitState {
            a0: Amplitude::new(0.0, 0.0),
            a1: Amplitude::new(1.0, 0.0),
        }
    }

    pub fn a0(&self) -> Amplitude {
        self.a0
    }

    pub fn a1(&self) -> Amplitude {
        self.a1
    }

    pub fn amplitudes(&self) -> [Amplitude; 2] {
        [self.a0, self.a1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0.norm_sqr() + self.a1.norm_sqr()
    }

    pub fn apply(&self, gate: &Gate) -> QubitState {
        let [[u00, u01], [u10, u11]] = gate.matrix();
        QubitState {
            a0: u00 * self.a0 + u01 * self.a1,
            a1: u10 * self.a0 + u11 * self.a1,
        }
    }
}

/// `((a0 + a1)/√2, (a0 - a1)/√2)`.
pub fn apply_hadamard(s: &QubitState) -> QubitState {
    QubitState {
        a0: (s.a0 + s.a1) * FRAC_1_SQRT_2,
        a1: (s.a0 - s.a1) * FRAC_1_SQRT_2,
    }
}

/// A 2×2 unitary, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2([[Amplitude; 2]; 2]);

impl Unitary2 {
    pub fn new(m: [[Amplitude; 2]; 2]) -> Result<Self> {
        check_finite(&[m[0][0], m[0][1], m[1][0], m[1][1]])?;
        // Deviation of U†U from the identity.
        let mut dev = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let dot = m[0][i].conj() * m[0][j] + m[1][i].conj() * m[1][j];
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((dot - target).norm());
            }
        }
        if dev > NORM_TOLERANCE {
            return Err(Error::NotUnitary(dev));
        }
        Ok(Unitary2(m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H,
    X,
    Z,
    Unitary(Unitary2),
}

impl Gate {
    pub fn matrix(&self) -> [[Amplitude; 2]; 2] {
        let c = |re: f64| Amplitude::new(re, 0.0);
        match self {
            Gate::H => [
                [c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)],
                [c(FRAC_1_SQRT_2), c(-FRAC_1_SQRT_2)],
            ],
            Gate::X => [[c(0.0), c(1.0)], [c(1.0), c(0.0)]],
            Gate::Z => [[c(1.0), c(0.0)], [c(0.0), c(-1.0)]],
            Gate::Unitary(u) => u.0,
        }
    }
}

/// Memberships of a qubit in `|0⟩` and `|1⟩`. The sum is unconstrained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyQubitState {
    mu0: Grade,
    mu1: Grade,
}

impl FuzzyQubitState {
    pub fn new(mu0: f64, mu1: f64) -> Result<Self> {
        Ok(FuzzyQubitState {
            mu0: Grade::new(mu0)?,
            mu1: Grade::new(mu1)?,
        })
    }

    pub fn mu0(&self) -> Grade {
        self.mu0
    }

    pub fn mu1(&self) -> Grade {
        self.mu1
    }

    /// Whether the memberships also form a Born distribution.
    pub fn is_born_compatible(&self) -> bool {
        (self.mu0.value() + self.mu1.value() - 1.0).abs() <= NORM_TOLERANCE
    }

    /// The same memberships as a fuzzy set over `{ket0, ket1}`.
    pub fn to_fuzzy_set(&self) -> FiniteFuzzySet {
        FiniteFuzzySet::new(
            Universe::new(["ket0", "ket1"]).expect("distinct labels"),
            vec![self.mu0, self.mu1],
        )
        .expect("two grades for two labels")
    }
}

/// `(|a0|², |a1|²)`.
pub fn fuzzify(s: &QubitState) -> FuzzyQubitState {
    // A state normalized within 1e-9 can overshoot 1 by round-off.
    FuzzyQubitState {
        mu0: Grade::saturating(s.a0.norm_sqr()),
        mu1: Grade::saturating(s.a1.norm_sqr()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Zero,
    One,
}

impl Outcome {
    pub fn bit(self) -> u8 {
        match self {
            Outcome::Zero => 0,
            Outcome::One => 1,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Defuzzifier {
    /// Larger membership wins; ties go to `|0⟩`.
    Argmax,
    /// `|0⟩` with probability `mu0 / (mu0 + mu1)`.
    BornSample,
}

fn argmax(s: &FuzzyQubitState) -> Outcome {
    if s.mu1.value() - s.mu0.value() > TIE_TOLERANCE {
        Outcome::One
    } else {
        Outcome::Zero
    }
}

fn born_probability_of_zero(s: &FuzzyQubitState) -> Result<f64> {
    let total = s.mu0.value() + s.mu1.value();
    if total <= 0.0 {
        return Err(Error::NoMass);
    }
    Ok(s.mu0.value() / total)
}

/// Collapses a fuzzy qubit to a crisp basis label. `seed` only matters for
/// [`Defuzzifier::BornSample`].
pub fn defuzzify(s: &FuzzyQubitState, method: Defuzzifier, seed: u64) -> Result<Outcome> {
    match method {
        Defuzzifier::Argmax => Ok(argmax(s)),
        Defuzzifier::BornSample => Ok(born_samples(s, 1, seed)?[0]),
    }
}

/// `shots` independent Born draws from one generator seeded with `seed`.
pub fn born_samples(s: &FuzzyQubitState, shots: usize, seed: u64) -> Result<Vec<Outcome>> {
    let p0 = born_probability_of_zero(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..shots)
        .map(|_| {
            if rng.gen::<f64>() < p0 {
                Outcome::Zero
            } else {
                Outcome::One
            }
        })
        .collect())
}

/// Two-qubit statevector ordered `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amps: [Amplitude; 4],
}

impl TwoQubitState {
    pub fn new(amps: [Amplitude; 4]) -> Result<Self> {
        check_norm(&amps)?;
        Ok(TwoQubitState { amps })
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell() -> Self {
        let r = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        let z = Amplitude::new(0.0, 0.0);
        TwoQubitState { amps: [r, z, z, r] }
    }

    pub fn amplitudes(&self) -> [Amplitude; 4] {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `det [[a00, a01], [a10, a11]]`; zero exactly for product states.
    pub fn determinant(&self) -> Amplitude {
        let [a00, a01, a10, a11] = self.amps;
        a00 * a11 - a01 * a10
    }

    pub fn is_entangled(&self, tol: f64) -> bool {
        self.determinant().norm() > tol
    }
}

pub fn tensor_product(a: &QubitState, b: &QubitState) -> TwoQubitState {
    TwoQubitState {
        amps: [a.a0 * b.a0, a.a0 * b.a1, a.a1 * b.a0, a.a1 * b.a1],
    }
}

fn literal_error(message: String) -> Error {
    Error::Parse { line: 0, message }
}

fn parse_amplitudes(body: &str) -> Result<Vec<Amplitude>> {
    let nums = body
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| literal_error(format!("bad number `{}` in amplitude list", t.trim())))
        })
        .collect::<Result<Vec<f64>>>()?;
    if nums.len() % 2 != 0 {
        return Err(literal_error("amplitudes come in re,im pairs".into()));
    }
    Ok(nums.chunks(2).map(|c| Amplitude::new(c[0], c[1])).collect())
}

/// Parses `|0>`, `|1>` (or bare `0`/`1`) or `amp re,im,re,im`.
pub fn parse_qubit(text: &str) -> Result<QubitState> {
    let t = text.trim();
    match t {
        "|0>" | "0" => return Ok(QubitState::ket0()),
        "|1>" | "1" => return Ok(QubitState::ket1()),
        _ => {}
    }
    let body = t
        .strip_prefix("amp")
        .ok_or_else(|| literal_error(format!("unknown qubit literal `{t}`")))?;
    let amps = parse_amplitudes(body)?;
    if amps.len() != 2 {
        return Err(literal_error(format!(
            "a qubit needs 2 amplitudes, got {}",
            amps.len()
        )));
    }
    QubitState::new(amps[0], amps[1])
}

/// Parses `bell`, `|00>`..`|11>` or `amp` followed by four re,im pairs.
pub fn parse_two_qubit(text: &str) -> Result<TwoQubitState> {
    let t = text.trim();
    if t == "bell" {
        return Ok(TwoQubitState::bell());
    }
    if let Some(bits) = t.strip_prefix('|').and_then(|r| r.strip_suffix('>')) {
        let (a, b) = match bits {
            "00" => (QubitState::ket0(), QubitState::ket0()),
            "01" => (QubitState::ket0(), QubitState::ket1()),
            "10" => (QubitState::ket1(), QubitState::ket0()),
            "11" => (QubitState::ket1(), QubitState::ket1()),
            _ => return Err(literal_error(format!("unknown two-qubit literal `{t}`"))),
        };
        return Ok(tensor_product(&a, &b));
    }
    let body = t
        .strip_prefix("amp")
        .ok_or_else(|| literal_error(format!("unknown two-qubit literal `{t}`")))?;
    let amps = parse_amplitudes(body)?;
    let amps: [Amplitude; 4] = amps.try_into().map_err(|v: Vec<Amplitude>| {
        literal_error(format!("two qubits need 4 amplitudes, got {}", v.len()))
    })?;
    TwoQubitState::new(amps)
}

/// Parses `H`, `X`, `Z` or `U:` followed by eight reals (row-major re,im pairs).
pub fn parse_gate(text: &str) -> Result<Gate> {
    let t = text.trim();
    match t.to_ascii_uppercase().as_str() {
        "H" => return Ok(Gate::H),
        "X" => return Ok(Gate::X),
        "Z" => return Ok(Gate::Z),
        _ => {}
    }
    let body = t
        .strip_prefix("U:")
        .or_else(|| t.strip_prefix("u:"))
        .ok_or_else(|| literal_error(format!("unknown gate `{t}`")))?;
    let a = parse_amplitudes(body)?;
    if a.len() != 4 {
        return Err(literal_error(format!(
            "a 2x2 gate needs 4 entries, got {}",
            a.len()
        )));
    }
    Ok(Gate::Unitary(Unitary2::new([[a[0], a[1]], [a[2], a[3]]])?))
}
