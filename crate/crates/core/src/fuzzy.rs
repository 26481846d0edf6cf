//! Fuzzy subsets of finite universes and their set algebra.
//!
//! A fuzzy subset assigns every element of the universe a membership grade in
//! `[0, 1]`. Union and intersection are evaluated pointwise with a t-conorm
//! and a t-norm; the default pair is `max` / `min` and the complement is
//! `1 - A(x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::sets::FiniteSubset;

/// Inputs this far outside `[0, 1]` are clamped instead of rejected.
pub const GRADE_SLACK: f64 = 1e-12;

/// A membership degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Grade(f64);

impl Grade {
    pub const ZERO: Grade = Grade(0.0);
    pub const ONE: Grade = Grade(1.0);

    /// Validates `value`, clamping round-off within [`GRADE_SLACK`] of the
    /// unit interval.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(-GRADE_SLACK..=1.0 + GRADE_SLACK).contains(&value) {
            return Err(Error::GradeOutOfRange(value));
        }
        Ok(Grade(value.clamp(0.0, 1.0)))
    }

    /// Clamps into `[0, 1]` unconditionally. NaN maps to zero.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Grade(0.0)
        } else {
            Grade(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Grade {
        Grade(1.0 - self.0)
    }
}

impl TryFrom<f64> for Grade {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Grade::new(value)
    }
}

impl From<Grade> for f64 {
    fn from(g: Grade) -> f64 {
        g.0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A t-norm together with its dual t-conorm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TNorm {
    /// `min` / `max`.
    #[default]
    Minimum,
    /// `a·b` / `a + b - a·b` (probabilistic sum).
    Product,
    /// `max(0, a + b - 1)` / `min(1, a + b)` (bounded sum).
    Lukasiewicz,
}

impl TNorm {
    pub const ALL: [TNorm; 3] = [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz];

    pub fn tnorm(self, a: Grade, b: Grade) -> Grade {
        let (a, b) = (a.0, b.0);
        let v = match self {
            TNorm::Minimum => a.min(b),
            TNorm::Product => a * b,
            TNorm::Lukasiewicz => (a + b - 1.0).max(0.0),
        };
        Grade::saturating(v)
    }

    pub fn tconorm(self, a: Grade, b: Grade) -> Grade {
        let (a, b) = (a.0, b.0);
        let v = match self {
            TNorm::Minimum => a.max(b),
            TNorm::Product => a + b - a * b,
            TNorm::Lukasiewicz => (a + b).min(1.0),
        };
        Grade::saturating(v)
    }

    pub fn name(self) -> &'static str {
        match self {
            TNorm::Minimum => "minimum",
            TNorm::Product => "product",
            TNorm::Lukasiewicz => "lukasiewicz",
        }
    }
}

impl std::str::FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "min" | "minimum" => Ok(TNorm::Minimum),
            "product" | "prod" => Ok(TNorm::Product),
            "lukasiewicz" | "luk" => Ok(TNorm::Lukasiewicz),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown t-norm `{other}`"),
            }),
        }
    }
}

/// An ordered list of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Builds the subset holding the named elements.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<FiniteSubset> {
        let mut indices = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            indices.push(
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))?,
            );
        }
        FiniteSubset::from_indices(self.len(), indices)
    }

    pub fn full(&self) -> Result<FiniteSubset> {
        FiniteSubset::full(self.len())
    }

    /// Fails with the first position at which the two universes disagree.
    pub fn ensure_same(&self, other: &Universe) -> Result<()> {
        let n = self.len().max(other.len());
        for i in 0..n {
            let left = self.labels.get(i);
            let right = other.labels.get(i);
            if left != right {
                return Err(Error::UniverseMismatch {
                    position: i,
                    left: left.cloned().unwrap_or_else(|| "<none>".into()),
                    right: right.cloned().unwrap_or_else(|| "<none>".into()),
                });
            }
        }
        Ok(())
    }

    /// Renders a subset as `a|b|c`, or `{}` when empty.
    pub fn describe(&self, subset: &FiniteSubset) -> String {
        let names: Vec<&str> = subset.iter().map(|i| self.labels[i].as_str()).collect();
        if names.is_empty() {
            "{}".to_string()
        } else {
            names.join("|")
        }
    }
}

/// A fuzzy subset of a finite, ordered universe.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteFuzzySet {
    universe: Universe,
    grades: Vec<Grade>,
}

impl FiniteFuzzySet {
    pub fn new(universe: Universe, grades: Vec<Grade>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                got: grades.len(),
            });
        }
        Ok(FiniteFuzzySet { universe, grades })
    }

    /// Builds a set from `(label, grade)` pairs, validating every grade.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let (labels, values): (Vec<String>, Vec<f64>) =
            pairs.into_iter().map(|(l, g)| (l.into(), g)).unzip();
        let grades = values
            .into_iter()
            .map(Grade::new)
            .collect::<Result<Vec<_>>>()?;
        FiniteFuzzySet::new(Universe::new(labels)?, grades)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grade_of(&self, label: &str) -> Option<Grade> {
        self.universe.index_of(label).map(|i| self.grades[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Grade)> + '_ {
        self.universe
            .labels()
            .iter()
            .map(String::as_str)
            .zip(self.grades.iter().copied())
    }

    fn zip_with(
        &self,
        other: &FiniteFuzzySet,
        op: impl Fn(Grade, Grade) -> Grade,
    ) -> Result<FiniteFuzzySet> {
        self.universe.ensure_same(&other.universe)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(FiniteFuzzySet {
            universe: self.universe.clone(),
            grades,
        })
    }

    pub fn union(&self, other: &FiniteFuzzySet, t: TNorm) -> Result<FiniteFuzzySet> {
        self.zip_with(other, |a, b| t.tconorm(a, b))
    }

    pub fn intersection(&self, other: &FiniteFuzzySet, t: TNorm) -> Result<FiniteFuzzySet> {
        self.zip_with(other, |a, b| t.tnorm(a, b))
    }

    pub fn complement(&self) -> FiniteFuzzySet {
        FiniteFuzzySet {
            universe: self.universe.clone(),
            grades: self.grades.iter().map(|g| g.complement()).collect(),
        }
    }

    /// Largest grade. Fails on an empty universe.
    pub fn height(&self) -> Result<Grade> {
        self.grades
            .iter()
            .copied()
            .reduce(|a, b| if b.0 > a.0 { b } else { a })
            .ok_or(Error::EmptyUniverse)
    }

    /// True when some grade reaches `1 - tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.height().map(|h| h.0 >= 1.0 - tol).unwrap_or(false)
    }

    /// Crisp superlevel set `{x | A(x) >= alpha}` (or `>` when `strict`).
    pub fn alpha_cut(&self, alpha: f64, strict: bool) -> Result<FiniteSubset> {
        let indices = self
            .grades
            .iter()
            .enumerate()
            .filter(|(_, g)| if strict { g.0 > alpha } else { g.0 >= alpha })
            .map(|(i, _)| i);
        FiniteSubset::from_indices(self.len(), indices)
    }
}
