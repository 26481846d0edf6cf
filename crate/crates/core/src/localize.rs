//! Probability versus possibility of finding a particle in `[a, b)`.
//!
//! The probability is the integral of the density `|Ψ|²` over the interval.
//! The possibility uses the height-normalized distribution `π = ρ / sup ρ`,
//! so `π = 1` at the mode.
//! The possibility of the interval is reported twice: directly as
//! `sup_{[a,b)} π`, and as the Sugeno integral of `π` against its own
//! possibility measure. The two agree within the reported grid tolerance.
//!
//! Densities are stationary. A time label may be attached to a spec and is
//! echoed in reports, but it does not change the built-in densities.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::integral::{lebesgue_integral, sugeno_grid};
use crate::measures::{normalize_to_possibility, Measure};
use crate::sets::IntervalSet;

pub const DEFAULT_GRID_POINTS: usize = 10001;
pub const MIN_GRID_POINTS: usize = 101;
pub const MAX_BOX_LEVEL: u32 = 50;
/// Half-width of the default gaussian domain, in standard deviations. The
/// mass outside `±8σ` is about 1.2e-15.
pub const GAUSSIAN_HALF_WIDTH: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
pub enum WaveKind {
    Gaussian {
        mu: f64,
        sigma: f64,
    },
    /// `n`-th stationary state of a particle in a box of width `length`.
    BoxEigenstate {
        n: u32,
        length: f64,
    },
    /// Pre-sampled `|Ψ|²`.
    Samples(GridFunction),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionSpec {
    pub kind: WaveKind,
    pub domain: (f64, f64),
    pub grid_points: usize,
    pub time: Option<f64>,
}

impl WavefunctionSpec {
    pub fn gaussian(mu: f64, sigma: f64) -> Self {
        WavefunctionSpec {
            kind: WaveKind::Gaussian { mu, sigma },
            domain: (
                mu - GAUSSIAN_HALF_WIDTH * sigma,
                mu + GAUSSIAN_HALF_WIDTH * sigma,
            ),
            grid_points: DEFAULT_GRID_POINTS,
            time: None,
        }
    }

    pub fn box_eigenstate(n: u32, length: f64) -> Self {
        WavefunctionSpec {
            kind: WaveKind::BoxEigenstate { n, length },
            domain: (0.0, length),
            grid_points: DEFAULT_GRID_POINTS,
            time: None,
        }
    }

    pub fn samples(density: GridFunction) -> Self {
        WavefunctionSpec {
            domain: (density.x_min(), density.x_max()),
            grid_points: density.len(),
            kind: WaveKind::Samples(density),
            time: None,
        }
    }

    pub fn with_grid(mut self, grid_points: usize) -> Self {
        self.grid_points = grid_points;
        self
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Self {
        self.domain = (lo, hi);
        self
    }

    pub fn at_time(mut self, t: f64) -> Self {
        self.time = Some(t);
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWavefunction(m));
        let (lo, hi) = self.domain;
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return bad(format!("domain [{lo}, {hi}] is empty or not finite"));
        }
        match &self.kind {
            WaveKind::Gaussian { mu, sigma } => {
                if !mu.is_finite() || !sigma.is_finite() || *sigma <= 0.0 {
                    return bad(format!(
                        "gaussian needs finite mu and sigma > 0, got mu={mu}, sigma={sigma}"
                    ));
                }
            }
            WaveKind::BoxEigenstate { n, length } => {
                if !(1..=MAX_BOX_LEVEL).contains(n) {
                    return bad(format!("box level n={n} outside 1..={MAX_BOX_LEVEL}"));
                }
                if !length.is_finite() || *length <= 0.0 {
                    return bad(format!("box width L={length} must be positive"));
                }
                if self.domain != (0.0, *length) {
                    return bad(format!(
                        "box states live on [0, {length}], not [{lo}, {hi}]"
                    ));
                }
            }
            WaveKind::Samples(g) => {
                if self.domain != (g.x_min(), g.x_max()) {
                    return bad("sampled densities fix their own domain".into());
                }
                // The sample count is whatever the data has.
                return Ok(());
            }
        }
        if self.grid_points < MIN_GRID_POINTS {
            return bad(format!(
                "grid of {} points; at least {MIN_GRID_POINTS} required",
                self.grid_points
            ));
        }
        Ok(())
    }
}

/// Samples `|Ψ|²` on the spec's grid.
pub fn realize_density(w: &WavefunctionSpec) -> Result<GridFunction> {
    w.validate()?;
    let (lo, hi) = w.domain;
    match w.kind {
        WaveKind::Gaussian { mu, sigma } => {
            let norm = 1.0 / (sigma * (2.0 * PI).sqrt());
            GridFunction::from_fn(lo, hi, w.grid_points, |x| {
                let z = (x - mu) / sigma;
                norm * (-0.5 * z * z).exp()
            })
        }
        WaveKind::BoxEigenstate { n, length } => {
            GridFunction::from_fn(lo, hi, w.grid_points, |x| {
                let s = (n as f64 * PI * x / length).sin();
                2.0 / length * s * s
            })
        }
        WaveKind::Samples(ref g) => Ok(g.clone()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalizationReport {
    pub interval: (f64, f64),
    pub probability: f64,
    pub possibility: f64,
    pub possibility_sugeno: f64,
    pub density_norm: f64,
    pub grid_tolerance: f64,
    pub time: Option<f64>,
}

/// A realized density plus its possibility measure, reusable across intervals.
#[derive(Debug, Clone)]
pub struct Localizer {
    density: GridFunction,
    possibility: GridFunction,
    measure: Measure,
    density_norm: f64,
    time: Option<f64>,
}

impl Localizer {
    pub fn new(w: &WavefunctionSpec) -> Result<Self> {
        let density = realize_density(w)?;
        let possibility = normalize_to_possibility(&density)?;
        let measure = Measure::possibility_grid(possibility.clone())?;
        let whole = IntervalSet::interval(density.x_min(), density.x_max())?;
        let density_norm = lebesgue_integral(&density, &whole)?;
        Ok(Localizer {
            density,
            possibility,
            measure,
            density_norm,
            time: w.time,
        })
    }

    pub fn density(&self) -> &GridFunction {
        &self.density
    }

    /// The height-normalized distribution `π`.
    pub fn possibility_distribution(&self) -> &GridFunction {
        &self.possibility
    }

    pub fn density_norm(&self) -> f64 {
        self.density_norm
    }

    pub fn report(&self, a: f64, b: f64) -> Result<LocalizationReport> {
        if a.is_nan() || b.is_nan() || a >= b {
            return Err(Error::InvalidInterval {
                lo: a,
                hi: b,
                reason: "need a < b".into(),
            });
        }
        let set = IntervalSet::interval(a, b)?;
        let probability = lebesgue_integral(&self.density, &set)?;
        let possibility = self.measure.of_intervals(&set)?;
        let sugeno = sugeno_grid(&self.possibility, &set, &self.measure)?;
        Ok(LocalizationReport {
            interval: (a, b),
            probability,
            possibility,
            possibility_sugeno: sugeno.value,
            density_norm: self.density_norm,
            grid_tolerance: sugeno.tolerance,
            time: self.time,
        })
    }

    /// Reports for `windows` equal consecutive intervals covering the domain.
    pub fn sweep(&self, windows: usize) -> Result<Vec<LocalizationReport>> {
        let (lo, hi) = (self.density.x_min(), self.density.x_max());
        let edge = |k: usize| {
            if k == windows {
                hi
            } else {
                lo + (hi - lo) * k as f64 / windows as f64
            }
        };
        (0..windows)
            .map(|k| self.report(edge(k), edge(k + 1)))
            .collect()
    }
}

pub fn localize(w: &WavefunctionSpec, a: f64, b: f64) -> Result<LocalizationReport> {
    Localizer::new(w)?.report(a, b)
}
