//! Fuzzy languages: fuzzy subsets of the free monoid `S*` over an alphabet.
//!
//! The built-in language grades `0^i 1^j` (`i, j > 0`, `i ≠ j`) by
//! `min(i, j) / max(i, j)`, computed as an exact rational; every other
//! string over `{0, 1}` has grade 0. Custom languages are finite grade
//! tables (unlisted words grade 0). Union, intersection and complement are
//! evaluated lazily per query with `max`, `min` and `1 - x`.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fuzzy::Grade;

/// A set of symbols, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Self {
        let mut v: Vec<char> = symbols.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Alphabet(v)
    }

    pub fn binary() -> Self {
        Alphabet(vec!['0', '1'])
    }

    pub fn contains(&self, c: char) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    fn check_word(&self, word: &str) -> Result<()> {
        match word.chars().enumerate().find(|(_, c)| !self.contains(*c)) {
            Some((position, symbol)) => Err(Error::ForeignSymbol { symbol, position }),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0.iter().collect::<String>())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FuzzyLanguage {
    /// `λ(0^i 1^j) = j/i` if `i > j`, `i/j` if `i < j`; 0 elsewhere.
    ZerosThenOnes,
    Table {
        alphabet: Alphabet,
        grades: BTreeMap<String, Grade>,
    },
    Union(Box<FuzzyLanguage>, Box<FuzzyLanguage>),
    Intersection(Box<FuzzyLanguage>, Box<FuzzyLanguage>),
    Complement(Box<FuzzyLanguage>),
}

/// Exact grade of `word` in the built-in `0^i 1^j` language.
pub fn zeros_then_ones_grade(word: &str) -> Ratio<u64> {
    let zeros = word.chars().take_while(|&c| c == '0').count();
    let rest = &word[zeros..];
    let ones = rest.chars().take_while(|&c| c == '1').count();
    if ones != rest.len() || zeros == 0 || ones == 0 || zeros == ones {
        return Ratio::from_integer(0);
    }
    let (i, j) = (zeros as u64, ones as u64);
    if i > j {
        Ratio::new(j, i)
    } else {
        Ratio::new(i, j)
    }
}

fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl FuzzyLanguage {
    /// A finite grade table; words must use only `alphabet`.
    pub fn table(alphabet: Alphabet, grades: BTreeMap<String, Grade>) -> Result<Self> {
        for w in grades.keys() {
            alphabet.check_word(w)?;
        }
        Ok(FuzzyLanguage::Table { alphabet, grades })
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            FuzzyLanguage::ZerosThenOnes => Alphabet::binary(),
            FuzzyLanguage::Table { alphabet, .. } => alphabet.clone(),
            FuzzyLanguage::Union(a, _) | FuzzyLanguage::Intersection(a, _) => a.alphabet(),
            FuzzyLanguage::Complement(a) => a.alphabet(),
        }
    }

    /// `λ(word)`. Fails on symbols outside the alphabet.
    pub fn grade(&self, word: &str) -> Result<Grade> {
        self.alphabet().check_word(word)?;
        Ok(self.grade_unchecked(word))
    }

    fn grade_unchecked(&self, word: &str) -> Grade {
        match self {
            FuzzyLanguage::ZerosThenOnes => {
                Grade::saturating(ratio_to_f64(zeros_then_ones_grade(word)))
            }
            FuzzyLanguage::Table { grades, .. } => grades.get(word).copied().unwrap_or(Grade::ZERO),
            FuzzyLanguage::Union(a, b) => {
                let (x, y) = (a.grade_unchecked(word), b.grade_unchecked(word));
                if y > x {
                    y
                } else {
                    x
                }
            }
            FuzzyLanguage::Intersection(a, b) => {
                let (x, y) = (a.grade_unchecked(word), b.grade_unchecked(word));
                if y < x {
                    y
                } else {
                    x
                }
            }
            FuzzyLanguage::Complement(a) => a.grade_unchecked(word).complement(),
        }
    }

    pub fn union(self, other: FuzzyLanguage) -> Result<FuzzyLanguage> {
        same_alphabet(&self, &other)?;
        Ok(FuzzyLanguage::Union(Box::new(self), Box::new(other)))
    }

    pub fn intersection(self, other: FuzzyLanguage) -> Result<FuzzyLanguage> {
        same_alphabet(&self, &other)?;
        Ok(FuzzyLanguage::Intersection(Box::new(self), Box::new(other)))
    }

    pub fn complement(self) -> FuzzyLanguage {
        FuzzyLanguage::Complement(Box::new(self))
    }
}

fn same_alphabet(a: &FuzzyLanguage, b: &FuzzyLanguage) -> Result<()> {
    let (x, y) = (a.alphabet(), b.alphabet());
    if x != y {
        return Err(Error::AlphabetMismatch(x.to_string(), y.to_string()));
    }
    Ok(())
}
