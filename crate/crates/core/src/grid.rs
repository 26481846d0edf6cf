//! Nonnegative functions sampled on a uniform 1-D grid.
//!
//! Between nodes a `GridFunction` is read as the piecewise-linear interpolant
//! of its samples. Every other module (cuts, quadrature, possibility of an
//! interval) uses that same reading, so the geometry of a superlevel set and
//! the quadrature over it always agree.

use crate::error::{Error, Result};

/// Positions within this fraction of a cell from a node snap onto the node.
const NODE_SNAP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    x_min: f64,
    x_max: f64,
    samples: Vec<f64>,
}

impl GridFunction {
    pub fn new(x_min: f64, x_max: f64, samples: Vec<f64>) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if samples.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 samples, got {}",
                samples.len()
            )));
        }
        if let Some((i, v)) = samples
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidGrid(format!(
                "sample {i} is {v}; samples must be finite and nonnegative"
            )));
        }
        Ok(GridFunction {
            x_min,
            x_max,
            samples,
        })
    }

    /// Samples `f` at `n` equally spaced nodes spanning `[x_min, x_max]`.
    pub fn from_fn(x_min: f64, x_max: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 samples, got {n}"
            )));
        }
        let samples = (0..n).map(|i| f(node_at(x_min, x_max, n, i))).collect();
        GridFunction::new(x_min, x_max, samples)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.len() - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        node_at(self.x_min, self.x_max, self.len(), i)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.samples
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.node(i), v))
    }

    /// Supremum of the samples.
    pub fn height(&self) -> f64 {
        self.samples.iter().copied().fold(0.0, f64::max)
    }

    /// Largest jump between adjacent samples, `h · sup|f'|` for the interpolant.
    pub fn max_step(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| (w[1] - w[0]).abs())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Result<GridFunction> {
        GridFunction::new(
            self.x_min,
            self.x_max,
            self.samples.iter().map(|v| v * factor).collect(),
        )
    }

    pub fn contains(&self, x: f64) -> bool {
        let eps = NODE_SNAP * self.spacing();
        x >= self.x_min - eps && x <= self.x_max + eps
    }

    /// Fractional node position of `x`, snapped to an integer near nodes and
    /// clamped to the grid.
    pub(crate) fn position(&self, x: f64) -> f64 {
        let last = (self.len() - 1) as f64;
        let p = (x - self.x_min) / (self.x_max - self.x_min) * last;
        let r = p.round();
        let p = if (p - r).abs() < NODE_SNAP { r } else { p };
        p.clamp(0.0, last)
    }

    /// Linear interpolation at `x`; `x` is clamped into the domain.
    pub fn value_at(&self, x: f64) -> f64 {
        self.value_at_position(self.position(x))
    }

    pub(crate) fn value_at_position(&self, p: f64) -> f64 {
        let i = p.floor() as usize;
        if i + 1 >= self.len() {
            return self.samples[self.len() - 1];
        }
        let frac = p - i as f64;
        if frac == 0.0 {
            return self.samples[i];
        }
        self.samples[i] * (1.0 - frac) + self.samples[i + 1] * frac
    }

    /// Exact integral of the interpolant over `[lo, hi]` (composite trapezoid
    /// with interpolated partial cells). Bounds are clamped to the domain.
    pub(crate) fn integrate_between(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        let (p_lo, p_hi) = (self.position(lo), self.position(hi));
        let (f_lo, f_hi) = (self.value_at_position(p_lo), self.value_at_position(p_hi));
        let k0 = p_lo.ceil() as usize;
        let k1 = p_hi.floor() as usize;
        let (lo, hi) = (lo.max(self.x_min), hi.min(self.x_max));
        if k0 > k1 {
            return (hi - lo) * (f_lo + f_hi) * 0.5;
        }
        let left = (self.node(k0) - lo).max(0.0) * (f_lo + self.samples[k0]) * 0.5;
        let right = (hi - self.node(k1)).max(0.0) * (self.samples[k1] + f_hi) * 0.5;
        let inner: f64 = self.samples[k0..=k1].windows(2).map(|w| w[0] + w[1]).sum();
        left + inner * self.spacing() * 0.5 + right
    }

    /// Supremum of the interpolant over the closed interval `[lo, hi]`.
    pub(crate) fn sup_between(&self, lo: f64, hi: f64) -> f64 {
        let (p_lo, p_hi) = (self.position(lo), self.position(hi));
        let mut best = self
            .value_at_position(p_lo)
            .max(self.value_at_position(p_hi));
        let k0 = p_lo.ceil() as usize;
        let k1 = p_hi.floor() as usize;
        if k0 <= k1 {
            best = self.samples[k0..=k1].iter().copied().fold(best, f64::max);
        }
        best
    }
}

pub(crate) fn node_at(x_min: f64, x_max: f64, n: usize, i: usize) -> f64 {
    if i + 1 >= n {
        x_max
    } else {
        x_min + (x_max - x_min) * i as f64 / (n - 1) as f64
    }
}
