//! Plain-text file formats (UTF-8, LF, `#` comments) and report formatting.
//!
//! | data             | line format                      |
//! |------------------|----------------------------------|
//! | finite fuzzy set | `label,grade`                    |
//! | grid function    | header `x,value`, then `x,value` |
//! | table measure    | `e1\|e2\|...,value`, `{}` = ∅     |
//! | language table   | `word,grade`, `ε` or empty = ""  |
//!
//! Writers print reals with Rust's shortest round-trip representation, so a
//! written file parses back to bit-identical values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fuzzy::{FiniteFuzzySet, Grade, Universe};
use crate::grid::GridFunction;
use crate::language::{Alphabet, FuzzyLanguage};
use crate::measures::{TableMeasure, MAX_TABLE_UNIVERSE};
use crate::sets::FiniteSubset;

pub const GRID_HEADER: &str = "x,value";
/// Relative tolerance on the spacing of grid CSV rows.
pub const SPACING_TOLERANCE: f64 = 1e-9;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn split_record(line_no: usize, line: &str) -> Result<(&str, f64)> {
    let (key, value) = line
        .rsplit_once(',')
        .ok_or_else(|| parse_err(line_no, format!("expected `key,value`, got `{line}`")))?;
    let v = value
        .trim()
        .parse::<f64>()
        .map_err(|_| parse_err(line_no, format!("`{}` is not a number", value.trim())))?;
    Ok((key.trim(), v))
}

pub fn parse_fuzzy_set(text: &str) -> Result<FiniteFuzzySet> {
    let mut labels = Vec::new();
    let mut grades = Vec::new();
    for (n, line) in content_lines(text) {
        let (label, v) = split_record(n, line)?;
        if label.is_empty() {
            return Err(parse_err(n, "empty label"));
        }
        grades.push(Grade::new(v).map_err(|e| parse_err(n, e.to_string()))?);
        labels.push(label.to_string());
    }
    FiniteFuzzySet::new(Universe::new(labels)?, grades)
}

pub fn write_fuzzy_set(set: &FiniteFuzzySet) -> String {
    let mut out = String::from("# label,grade\n");
    for (label, g) in set.iter() {
        let _ = writeln!(out, "{label},{}", g.value());
    }
    out
}

/// True when the first content line is the grid header.
pub fn looks_like_grid(text: &str) -> bool {
    content_lines(text)
        .next()
        .map(|(_, l)| l.trim() == GRID_HEADER)
        .unwrap_or(false)
}

pub fn parse_grid(text: &str) -> Result<GridFunction> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, h)) if h.trim() == GRID_HEADER => {}
        Some((n, h)) => {
            return Err(parse_err(
                n,
                format!("expected header `{GRID_HEADER}`, got `{h}`"),
            ))
        }
        None => return Err(parse_err(0, "empty grid file")),
    }
    let mut xs = Vec::new();
    let mut lines_of = Vec::new();
    let mut values = Vec::new();
    for (n, line) in lines {
        let (x, v) = split_record(n, line)?;
        let x = x
            .parse::<f64>()
            .map_err(|_| parse_err(n, format!("`{x}` is not a number")))?;
        xs.push(x);
        values.push(v);
        lines_of.push(n);
    }
    if xs.len() < 2 {
        return Err(parse_err(0, "a grid needs at least two rows"));
    }
    let (x_min, x_max) = (xs[0], xs[xs.len() - 1]);
    let h = (x_max - x_min) / (xs.len() - 1) as f64;
    for (k, w) in xs.windows(2).enumerate() {
        let step = w[1] - w[0];
        if !step.is_finite() || (step - h).abs() > SPACING_TOLERANCE * h.abs() {
            return Err(parse_err(
                lines_of[k + 1],
                format!("spacing {step} deviates from the uniform step {h}"),
            ));
        }
    }
    GridFunction::new(x_min, x_max, values)
}

pub fn write_grid(f: &GridFunction) -> String {
    let mut out = String::with_capacity(f.len() * 24);
    out.push_str(GRID_HEADER);
    out.push('\n');
    for (x, v) in f.nodes() {
        let _ = writeln!(out, "{x},{v}");
    }
    out
}

/// Parses a total set-function table. The universe is ordered by first
/// appearance of each label.
pub fn parse_table_measure(text: &str) -> Result<TableMeasure> {
    let mut labels: Vec<String> = Vec::new();
    let mut rows: Vec<(usize, Vec<usize>, f64)> = Vec::new();
    for (n, line) in content_lines(text) {
        let (key, v) = split_record(n, line)?;
        let mut members = Vec::new();
        if key != "{}" {
            for name in key.split('|').map(str::trim) {
                if name.is_empty() {
                    return Err(parse_err(n, "empty element name"));
                }
                let idx = match labels.iter().position(|l| l == name) {
                    Some(i) => i,
                    None => {
                        labels.push(name.to_string());
                        labels.len() - 1
                    }
                };
                members.push(idx);
            }
        }
        rows.push((n, members, v));
    }
    if labels.len() > MAX_TABLE_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            size: labels.len(),
            limit: MAX_TABLE_UNIVERSE,
        });
    }
    let universe = Universe::new(labels)?;
    let mut entries = Vec::with_capacity(rows.len());
    let mut seen = std::collections::HashSet::new();
    for (n, members, v) in rows {
        let subset = FiniteSubset::from_indices(universe.len(), members)?;
        if !seen.insert(subset.mask()) {
            return Err(parse_err(
                n,
                format!("duplicate entry for {}", universe.describe(&subset)),
            ));
        }
        entries.push((subset, v));
    }
    TableMeasure::new(universe, &entries)
}

pub fn write_table_measure(t: &TableMeasure) -> String {
    let u = t.universe();
    let mut out = String::new();
    for mask in 0..(1u64 << u.len()) {
        let s = FiniteSubset::from_mask(u.len(), mask).expect("mask within universe");
        let _ = writeln!(out, "{},{}", u.describe(&s), t.value(&s));
    }
    out
}

/// Parses a `word,grade` table. Without an explicit alphabet, the symbols
/// occurring in the words are used.
pub fn parse_language_table(text: &str, alphabet: Option<Alphabet>) -> Result<FuzzyLanguage> {
    let mut grades = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let (word, v) = split_record(n, line)?;
        let word = if word == "ε" { "" } else { word };
        let g = Grade::new(v).map_err(|e| parse_err(n, e.to_string()))?;
        if grades.insert(word.to_string(), g).is_some() {
            return Err(parse_err(n, format!("duplicate word `{word}`")));
        }
    }
    let alphabet = alphabet.unwrap_or_else(|| Alphabet::new(grades.keys().flat_map(|w| w.chars())));
    FuzzyLanguage::table(alphabet, grades)
}

/// Report number format: 9 digits after the point for ordinary magnitudes,
/// 9 significant digits in scientific notation for very small or large ones.
pub fn format_number(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e9).contains(&a) {
        format!("{v:.9}")
    } else if v.is_finite() {
        format!("{v:.8e}")
    } else {
        v.to_string()
    }
}
