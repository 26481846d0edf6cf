//! Monotone measures on interval sets and finite universes.
//!
//! Three families are supported:
//!
//! * additive measures induced by a sampled density (probability when the
//!   density has unit mass),
//! * possibility measures induced by a distribution `π` with `sup π = 1`,
//!   where `Π(A) = sup_{x ∈ A} π(x)`,
//! * explicit set-function tables over a small finite universe, checked for
//!   `μ(∅) = 0`, `μ(X) = 1` and monotonicity when built.
//!
//! Interval endpoints need not sit on grid nodes; values there come from the
//! linear interpolant. The possibility of `[lo, hi)` is the largest of the
//! node values strictly inside plus the two interpolated endpoint values.

use crate::error::{Error, Result};
use crate::fuzzy::{FiniteFuzzySet, Universe};
use crate::grid::GridFunction;
use crate::sets::{FiniteSubset, IntervalSet, Region};

/// Densities whose mass is within this of 1 count as probability densities.
pub const MASS_TOLERANCE: f64 = 1e-6;
/// Possibility distributions must reach 1 within this.
pub const HEIGHT_TOLERANCE: f64 = 1e-9;
/// Slack for the table axioms `μ(∅) = 0`, `μ(X) = 1` and monotonicity.
pub const TABLE_TOLERANCE: f64 = 1e-12;
/// Largest universe accepted for set-function tables (2^16 entries).
pub const MAX_TABLE_UNIVERSE: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct AdditiveMeasure {
    density: GridFunction,
    mass: f64,
}

impl AdditiveMeasure {
    pub fn density(&self) -> &GridFunction {
        &self.density
    }

    /// Integral of the density over its whole grid.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn is_normalized(&self) -> bool {
        (self.mass - 1.0).abs() <= MASS_TOLERANCE
    }
}

/// A set function over every subset of a finite universe.
#[derive(Debug, Clone, PartialEq)]
pub struct TableMeasure {
    universe: Universe,
    // Indexed by subset bitmask.
    values: Vec<f64>,
}

impl TableMeasure {
    /// Builds a table from a total list of `(subset, value)` entries.
    pub fn new(universe: Universe, entries: &[(FiniteSubset, f64)]) -> Result<Self> {
        let n = universe.len();
        if n > MAX_TABLE_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: n,
                limit: MAX_TABLE_UNIVERSE,
            });
        }
        let mut values = vec![f64::NAN; 1 << n];
        for (subset, v) in entries {
            if subset.universe_len() != n {
                return Err(Error::DomainMismatch(format!(
                    "table entry over a universe of {} elements, expected {n}",
                    subset.universe_len()
                )));
            }
            if !v.is_finite() {
                return Err(Error::InvalidMeasure(format!(
                    "value {v} for {} is not finite",
                    universe.describe(subset)
                )));
            }
            values[subset.mask() as usize] = *v;
        }
        if let Some(mask) = values.iter().position(|v| v.is_nan()) {
            let missing = FiniteSubset::from_mask(n, mask as u64)?;
            return Err(Error::MissingTableEntry(universe.describe(&missing)));
        }
        let table = TableMeasure { universe, values };
        table.validate()?;
        Ok(table)
    }

    /// Tabulates `f` on every subset, then validates.
    pub fn from_fn(universe: Universe, f: impl Fn(&FiniteSubset) -> f64) -> Result<Self> {
        let n = universe.len();
        if n > MAX_TABLE_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: n,
                limit: MAX_TABLE_UNIVERSE,
            });
        }
        let entries = (0..1u64 << n)
            .map(|m| {
                let s = FiniteSubset::from_mask(n, m)?;
                Ok((s, f(&s)))
            })
            .collect::<Result<Vec<_>>>()?;
        TableMeasure::new(universe, &entries)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn value(&self, subset: &FiniteSubset) -> f64 {
        self.values[subset.mask() as usize]
    }

    /// The same set function with its universe relabelled into `order`.
    pub fn reordered(&self, order: &Universe) -> Result<TableMeasure> {
        if order.len() != self.universe.len() {
            return Err(Error::DomainMismatch(format!(
                "cannot reorder a table over {} elements into {}",
                self.universe.len(),
                order.len()
            )));
        }
        let perm = order
            .labels()
            .iter()
            .map(|l| {
                self.universe
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = order.len();
        let mut values = vec![0.0; 1 << n];
        for (mask, slot) in values.iter_mut().enumerate() {
            let src = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0usize, |acc, i| acc | 1 << perm[i]);
            *slot = self.values[src];
        }
        Ok(TableMeasure {
            universe: order.clone(),
            values,
        })
    }

    fn validate(&self) -> Result<()> {
        let n = self.universe.len();
        let full = (1usize << n) - 1;
        if self.values[0].abs() > TABLE_TOLERANCE {
            return Err(Error::InvalidMeasure(format!(
                "mu({{}}) = {}, expected 0",
                self.values[0]
            )));
        }
        if (self.values[full] - 1.0).abs() > TABLE_TOLERANCE {
            return Err(Error::InvalidMeasure(format!(
                "mu(X) = {}, expected 1",
                self.values[full]
            )));
        }
        // Every strict inclusion E ⊂ F is a chain of single-element additions,
        // so checking each covering pair checks all pairs.
        for mask in 0..=full {
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    continue;
                }
                let bigger = mask | 1 << i;
                let (small, large) = (self.values[mask], self.values[bigger]);
                if small > large + TABLE_TOLERANCE {
                    let describe = |m: usize| {
                        FiniteSubset::from_mask(n, m as u64)
                            .map(|s| self.universe.describe(&s))
                            .unwrap_or_default()
                    };
                    return Err(Error::NotMonotone {
                        smaller: describe(mask),
                        smaller_value: small,
                        larger: describe(bigger),
                        larger_value: large,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Measure {
    Additive(AdditiveMeasure),
    PossibilisticGrid(GridFunction),
    PossibilisticFinite(FiniteFuzzySet),
    Table(TableMeasure),
}

impl Measure {
    /// Additive measure from a density of any mass. Use
    /// [`AdditiveMeasure::is_normalized`] to see whether it is a probability.
    pub fn additive(density: GridFunction) -> Measure {
        let mass = density.integrate_between(density.x_min(), density.x_max());
        Measure::Additive(AdditiveMeasure { density, mass })
    }

    /// Additive measure that must have unit mass within [`MASS_TOLERANCE`].
    pub fn probability(density: GridFunction) -> Result<Measure> {
        let m = Measure::additive(density);
        match &m {
            Measure::Additive(a) if !a.is_normalized() => Err(Error::InvalidMeasure(format!(
                "density integrates to {}, not 1",
                a.mass
            ))),
            _ => Ok(m),
        }
    }

    pub fn possibility_grid(distribution: GridFunction) -> Result<Measure> {
        let h = distribution.height();
        if (h - 1.0).abs() > HEIGHT_TOLERANCE {
            return Err(Error::InvalidMeasure(format!(
                "possibility distribution has supremum {h}, not 1"
            )));
        }
        Ok(Measure::PossibilisticGrid(distribution))
    }

    pub fn possibility_finite(distribution: FiniteFuzzySet) -> Result<Measure> {
        let h = distribution.height()?.value();
        if (h - 1.0).abs() > HEIGHT_TOLERANCE {
            return Err(Error::InvalidMeasure(format!(
                "possibility distribution has supremum {h}, not 1"
            )));
        }
        if distribution.len() > crate::sets::MAX_SUBSET_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: distribution.len(),
                limit: crate::sets::MAX_SUBSET_UNIVERSE,
            });
        }
        Ok(Measure::PossibilisticFinite(distribution))
    }

    pub fn table(table: TableMeasure) -> Measure {
        Measure::Table(table)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Measure::Additive(_) => "additive",
            Measure::PossibilisticGrid(_) | Measure::PossibilisticFinite(_) => "possibilistic",
            Measure::Table(_) => "table",
        }
    }

    pub fn is_possibilistic(&self) -> bool {
        matches!(
            self,
            Measure::PossibilisticGrid(_) | Measure::PossibilisticFinite(_)
        )
    }

    /// The finite universe, for measures that live on one.
    pub fn universe(&self) -> Option<&Universe> {
        match self {
            Measure::PossibilisticFinite(d) => Some(d.universe()),
            Measure::Table(t) => Some(t.universe()),
            _ => None,
        }
    }

    /// The grid, for measures that live on the line.
    pub fn grid(&self) -> Option<&GridFunction> {
        match self {
            Measure::Additive(a) => Some(&a.density),
            Measure::PossibilisticGrid(d) => Some(d),
            _ => None,
        }
    }

    pub fn measure_of(&self, region: &Region) -> Result<f64> {
        match region {
            Region::Intervals(s) => self.of_intervals(s),
            Region::Subset(s) => self.of_subset(s),
        }
    }

    pub fn of_intervals(&self, set: &IntervalSet) -> Result<f64> {
        let grid = self.grid().ok_or_else(|| {
            Error::DomainMismatch(format!(
                "{} measure lives on a finite universe, not the real line",
                self.kind_name()
            ))
        })?;
        ensure_within(grid, set)?;
        Ok(match self {
            Measure::Additive(a) => set
                .intervals()
                .iter()
                .map(|&(lo, hi)| a.density.integrate_between(lo, hi))
                .sum(),
            _ => set
                .intervals()
                .iter()
                .map(|&(lo, hi)| grid.sup_between(lo, hi))
                .fold(0.0, f64::max),
        })
    }

    pub fn of_subset(&self, subset: &FiniteSubset) -> Result<f64> {
        let n = self.universe().map(Universe::len).ok_or_else(|| {
            Error::DomainMismatch(format!(
                "{} measure lives on the real line, not a finite universe",
                self.kind_name()
            ))
        })?;
        if subset.universe_len() != n {
            return Err(Error::DomainMismatch(format!(
                "subset of a {}-element universe given to a measure over {n} elements",
                subset.universe_len()
            )));
        }
        Ok(match self {
            Measure::PossibilisticFinite(d) => subset
                .iter()
                .map(|i| d.grades()[i].value())
                .fold(0.0, f64::max),
            Measure::Table(t) => t.value(subset),
            _ => unreachable!("universe() is None for grid measures"),
        })
    }
}

/// Rejects interval sets reaching outside the grid's span.
pub(crate) fn ensure_within(grid: &GridFunction, set: &IntervalSet) -> Result<()> {
    if let Some((lo, hi)) = set.bounds() {
        if !grid.contains(lo) || !grid.contains(hi) {
            return Err(Error::OutsideDomain {
                lo,
                hi,
                x_min: grid.x_min(),
                x_max: grid.x_max(),
            });
        }
    }
    Ok(())
}

fn union_all(parts: &[IntervalSet]) -> IntervalSet {
    parts
        .iter()
        .fold(IntervalSet::empty(), |acc, p| acc.union(p))
}

/// Checks `Π(∪ parts) = max Π(part)` within 1e-12.
pub fn check_possibility_union_axiom(m: &Measure, parts: &[IntervalSet]) -> Result<bool> {
    if !m.is_possibilistic() {
        return Err(Error::WrongMeasureKind {
            expected: "possibilistic",
            got: m.kind_name(),
        });
    }
    let whole = m.of_intervals(&union_all(parts))?;
    let mut best = 0.0f64;
    for p in parts {
        best = best.max(m.of_intervals(p)?);
    }
    Ok((whole - best).abs() <= 1e-12)
}

/// Checks `μ(∪ parts) = Σ μ(part)` within `tol` for pairwise disjoint parts.
pub fn check_additivity(m: &Measure, parts: &[IntervalSet], tol: f64) -> Result<bool> {
    if !matches!(m, Measure::Additive(_)) {
        return Err(Error::WrongMeasureKind {
            expected: "additive",
            got: m.kind_name(),
        });
    }
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate().skip(i + 1) {
            if a.overlaps(b) {
                return Err(Error::OverlappingParts {
                    first: i,
                    second: j,
                });
            }
        }
    }
    let whole = m.of_intervals(&union_all(parts))?;
    let mut sum = 0.0;
    for p in parts {
        sum += m.of_intervals(p)?;
    }
    Ok((whole - sum).abs() <= tol)
}

/// Rescales `f` by its height so the result has supremum 1.
pub fn normalize_to_possibility(f: &GridFunction) -> Result<GridFunction> {
    let h = f.height();
    if h <= 0.0 {
        return Err(Error::ZeroFunction);
    }
    GridFunction::new(
        f.x_min(),
        f.x_max(),
        f.samples().iter().map(|v| v / h).collect(),
    )
}
