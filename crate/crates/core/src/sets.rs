//! Crisp measurable sets: finite unions of half-open intervals on the real
//! line, and subsets of a finite universe.

use std::fmt;

use crate::error::{Error, Result};

/// A finite union of disjoint half-open intervals `[lo, hi)`, sorted by `lo`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IntervalSet {
    intervals: Vec<(f64, f64)>,
}

impl IntervalSet {
    /// Validates an already sorted, pairwise disjoint list.
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        for &(lo, hi) in &intervals {
            check_interval(lo, hi)?;
        }
        for w in intervals.windows(2) {
            if w[0].1 > w[1].0 {
                return Err(Error::InvalidInterval {
                    lo: w[1].0,
                    hi: w[1].1,
                    reason: format!("overlaps or precedes [{}, {})", w[0].0, w[0].1),
                });
            }
        }
        Ok(IntervalSet { intervals })
    }

    /// Sorts and merges overlapping or touching intervals.
    pub fn from_unsorted(intervals: Vec<(f64, f64)>) -> Result<Self> {
        for &(lo, hi) in &intervals {
            check_interval(lo, hi)?;
        }
        Ok(IntervalSet {
            intervals: merge(intervals),
        })
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        check_interval(lo, hi)?;
        Ok(IntervalSet {
            intervals: vec![(lo, hi)],
        })
    }

    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Total Lebesgue length.
    pub fn length(&self) -> f64 {
        self.intervals.iter().map(|(lo, hi)| hi - lo).sum()
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        Some((self.intervals.first()?.0, self.intervals.last()?.1))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let all = self
            .intervals
            .iter()
            .chain(&other.intervals)
            .copied()
            .collect();
        IntervalSet {
            intervals: merge(all),
        }
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.intervals.len() && j < other.intervals.len() {
            let (a_lo, a_hi) = self.intervals[i];
            let (b_lo, b_hi) = other.intervals[j];
            let (lo, hi) = (a_lo.max(b_lo), a_hi.min(b_hi));
            if lo < hi {
                out.push((lo, hi));
            }
            if a_hi <= b_hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { intervals: out }
    }

    /// True when the two sets share a piece of positive length.
    pub fn overlaps(&self, other: &IntervalSet) -> bool {
        !self.intersection(other).is_empty()
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intervals.iter().all(|&(lo, hi)| {
            other
                .intervals
                .iter()
                .any(|&(olo, ohi)| olo <= lo && hi <= ohi)
        })
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo <= x && x < hi)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        for (k, (lo, hi)) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "[{lo}, {hi})")?;
        }
        Ok(())
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInterval {
            lo,
            hi,
            reason: "endpoints must be finite".into(),
        });
    }
    if lo >= hi {
        return Err(Error::InvalidInterval {
            lo,
            hi,
            reason: "need lo < hi".into(),
        });
    }
    Ok(())
}

fn merge(mut intervals: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
    for (lo, hi) in intervals {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Largest finite universe a [`FiniteSubset`] can index.
pub const MAX_SUBSET_UNIVERSE: usize = 64;

/// A crisp subset of a finite universe of `n` elements, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteSubset {
    n: usize,
    mask: u64,
}

impl FiniteSubset {
    pub fn empty(n: usize) -> Result<Self> {
        FiniteSubset::from_mask(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        let mask = 1u64.checked_shl(n as u32).map_or(u64::MAX, |b| b - 1);
        FiniteSubset::from_mask(n, mask)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_SUBSET_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: n,
                limit: MAX_SUBSET_UNIVERSE,
            });
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::DomainMismatch(format!(
                "mask {mask:#x} has bits beyond a universe of {n}"
            )));
        }
        Ok(FiniteSubset { n, mask })
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for i in indices {
            if i >= n {
                return Err(Error::DomainMismatch(format!(
                    "index {i} outside a universe of {n}"
                )));
            }
            mask |= 1 << i;
        }
        FiniteSubset::from_mask(n, mask)
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.mask >> i & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.contains(i))
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n, "index {i} outside a universe of {}", self.n);
        self.mask |= 1 << i;
    }

    pub fn intersection(&self, other: &FiniteSubset) -> FiniteSubset {
        FiniteSubset {
            n: self.n,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(&self, other: &FiniteSubset) -> FiniteSubset {
        FiniteSubset {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &FiniteSubset) -> bool {
        self.mask & !other.mask == 0
    }
}

/// A set handed to a measure: either intervals on the line or a finite subset.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Intervals(IntervalSet),
    Subset(FiniteSubset),
}

impl From<IntervalSet> for Region {
    fn from(s: IntervalSet) -> Self {
        Region::Intervals(s)
    }
}

impl From<FiniteSubset> for Region {
    fn from(s: FiniteSubset) -> Self {
        Region::Subset(s)
    }
}
