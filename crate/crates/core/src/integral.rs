//! Lebesgue-style quadrature and the Sugeno integral.
//!
//! The Sugeno integral of `f` over `A` with respect to a monotone measure `μ`
//! is `sup_α min(α, μ(A ∩ F_α))` with `F_α = {x | f(x) ≥ α}`.
//!
//! On a finite universe the supremum is computed exactly: sort the elements
//! of `A` by decreasing value and take the best `min(f(x_(i)), μ({x_(1)..x_(i)}))`.
//!
//! On a grid the map `g(α) = μ(A ∩ F_α)` is non-increasing, so
//! `min(α, g(α))` peaks where `α` crosses `g(α)`. The sample values of `f`
//! are the candidate jump points of `g`. A binary search over them brackets
//! the crossing and bisection refines it to [`BISECTION_TOLERANCE`].

use crate::error::{Error, Result};
use crate::fuzzy::FiniteFuzzySet;
use crate::grid::GridFunction;
use crate::measures::{ensure_within, Measure};
use crate::sets::{FiniteSubset, IntervalSet};

pub const BISECTION_TOLERANCE: f64 = 1e-10;
/// Floor of the reported grid tolerance.
pub const MIN_GRID_TOLERANCE: f64 = 1e-6;

/// A superlevel set `F_α = {x | f(x) ≥ α}`, or `{x | f(x) > α}` when `strict`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaCut {
    pub alpha: f64,
    pub strict: bool,
    pub cut: IntervalSet,
}

/// Superlevel set of the piecewise-linear reading of `f`. Boundaries sit at
/// the linear crossings of `f` with `alpha`. Isolated points (a peak touching
/// `alpha` exactly) have zero length and are dropped.
pub fn alpha_cut(f: &GridFunction, alpha: f64, strict: bool) -> AlphaCut {
    let pieces = superlevel_within(f, alpha, strict, f.x_min(), f.x_max());
    AlphaCut {
        alpha,
        strict,
        cut: IntervalSet::new(pieces).expect("superlevel pieces are sorted and disjoint"),
    }
}

/// Superlevel pieces of `f` clipped to `[lo, hi]`, sorted and merged.
fn superlevel_within(
    f: &GridFunction,
    alpha: f64,
    strict: bool,
    lo: f64,
    hi: f64,
) -> Vec<(f64, f64)> {
    let above = |v: f64| if strict { v > alpha } else { v >= alpha };
    let s = f.samples();
    let first = f.position(lo).floor() as usize;
    let last = (f.position(hi).ceil() as usize).min(s.len() - 1);
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut push = |a: f64, b: f64| {
        let (a, b) = (a.max(lo), b.min(hi));
        if a >= b {
            return;
        }
        match out.last_mut() {
            Some(prev) if a <= prev.1 => prev.1 = prev.1.max(b),
            _ => out.push((a, b)),
        }
    };
    for i in first..last {
        let (v0, v1) = (s[i], s[i + 1]);
        let (x0, x1) = (f.node(i), f.node(i + 1));
        match (above(v0), above(v1)) {
            (true, true) => push(x0, x1),
            (true, false) => push(x0, x0 + (x1 - x0) * (v0 - alpha) / (v0 - v1)),
            (false, true) => push(x0 + (x1 - x0) * (alpha - v0) / (v1 - v0), x1),
            (false, false) => {}
        }
    }
    out
}

/// Integral of the interpolant of `f` over `a` by the composite trapezoid
/// rule, with linearly interpolated partial cells at the interval ends.
pub fn lebesgue_integral(f: &GridFunction, a: &IntervalSet) -> Result<f64> {
    ensure_within(f, a)?;
    Ok(a.intervals()
        .iter()
        .map(|&(lo, hi)| f.integrate_between(lo, hi))
        .sum())
}

/// A grid Sugeno integral with its declared error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SugenoEstimate {
    pub value: f64,
    pub tolerance: f64,
}

/// `max(1e-6, 2·h·sup|f'|)` for the piecewise-linear reading of `f`.
pub fn grid_tolerance(f: &GridFunction) -> f64 {
    MIN_GRID_TOLERANCE.max(2.0 * f.max_step())
}

/// Sugeno integral of a finite fuzzy set over `a` by the sorted-value formula.
pub fn sugeno_finite(f: &FiniteFuzzySet, a: &FiniteSubset, m: &Measure) -> Result<f64> {
    let universe = m.universe().ok_or_else(|| {
        Error::DomainMismatch(format!(
            "{} measure on the real line cannot integrate a finite fuzzy set",
            m.kind_name()
        ))
    })?;
    universe.ensure_same(f.universe())?;
    if a.universe_len() != f.len() {
        return Err(Error::DomainMismatch(format!(
            "subset of a {}-element universe, function over {}",
            a.universe_len(),
            f.len()
        )));
    }
    let grades = f.grades();
    let mut order: Vec<usize> = a.iter().collect();
    order.sort_by(|&i, &j| grades[j].value().total_cmp(&grades[i].value()));
    let mut prefix = FiniteSubset::empty(f.len())?;
    let mut best = 0.0f64;
    for i in order {
        prefix.insert(i);
        best = best.max(grades[i].value().min(m.of_subset(&prefix)?));
    }
    Ok(best)
}

/// Sugeno integral of a grid function over an interval set.
pub fn sugeno_grid(f: &GridFunction, a: &IntervalSet, m: &Measure) -> Result<SugenoEstimate> {
    let grid = m.grid().ok_or_else(|| {
        Error::DomainMismatch(format!(
            "{} measure on a finite universe cannot integrate a grid function",
            m.kind_name()
        ))
    })?;
    ensure_within(f, a)?;
    ensure_within(grid, a)?;
    let tolerance = grid_tolerance(f);
    if a.is_empty() {
        return Ok(SugenoEstimate {
            value: 0.0,
            tolerance,
        });
    }

    let level = |alpha: f64| -> Result<f64> {
        let pieces: Vec<(f64, f64)> = a
            .intervals()
            .iter()
            .flat_map(|&(lo, hi)| superlevel_within(f, alpha, false, lo, hi))
            .collect();
        m.of_intervals(&IntervalSet::from_unsorted(pieces)?)
    };

    let mut candidates = vec![0.0];
    for &(lo, hi) in a.intervals() {
        candidates.push(f.value_at(lo));
        candidates.push(f.value_at(hi));
        let k0 = f.position(lo).ceil() as usize;
        let k1 = f.position(hi).floor() as usize;
        if k0 <= k1 {
            candidates.extend_from_slice(&f.samples()[k0..=k1]);
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // Largest k with candidates[k] <= g(candidates[k]); k = 0 always qualifies.
    let (mut good, mut bad) = (0usize, candidates.len());
    while bad - good > 1 {
        let mid = (good + bad) / 2;
        if candidates[mid] <= level(candidates[mid])? {
            good = mid;
        } else {
            bad = mid;
        }
    }
    let mut best = candidates[good];
    if bad < candidates.len() {
        best = best.max(level(candidates[bad])?);
        let (mut lo, mut hi) = (candidates[good], candidates[bad]);
        for _ in 0..200 {
            if hi - lo <= BISECTION_TOLERANCE {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let g = level(mid)?;
            best = best.max(mid.min(g));
            if mid <= g {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    Ok(SugenoEstimate {
        value: best,
        tolerance,
    })
}

/// Independent reference for the finite Sugeno integral.
pub mod oracle {
    use super::*;

    /// Largest universe the brute-force scan accepts.
    pub const MAX_ORACLE_UNIVERSE: usize = 16;

    /// Evaluates `min(α, μ(a ∩ F_α))` on `grid` evenly spaced levels over
    /// `[0, max f]`, plus the sample values themselves (where the step
    /// function `α ↦ μ(a ∩ F_α)` jumps), and returns the largest.
    pub fn sugeno_bruteforce(
        f: &FiniteFuzzySet,
        a: &FiniteSubset,
        m: &Measure,
        grid: usize,
    ) -> Result<f64> {
        if f.len() > MAX_ORACLE_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: f.len(),
                limit: MAX_ORACLE_UNIVERSE,
            });
        }
        let values: Vec<f64> = f.grades().iter().map(|g| g.value()).collect();
        let top = values.iter().copied().fold(0.0, f64::max);
        let steps = grid.max(2) - 1;
        let levels = (0..=steps)
            .map(|k| top * k as f64 / steps as f64)
            .chain(values.iter().copied());
        let mut best = 0.0f64;
        for alpha in levels {
            let cut = FiniteSubset::from_indices(
                f.len(),
                (0..f.len()).filter(|&i| a.contains(i) && values[i] >= alpha),
            )?;
            best = best.max(alpha.min(m.of_subset(&cut)?));
        }
        Ok(best)
    }
}
