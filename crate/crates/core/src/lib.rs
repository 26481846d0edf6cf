//! Fuzzy sets, possibility measures and Sugeno integrals, with fuzzy readings
//! of single qubits, particle localization and formal languages.

pub mod cli;
pub mod error;
pub mod formats;
pub mod fuzzy;
pub mod grid;
pub mod integral;
pub mod language;
pub mod localize;
pub mod measures;
pub mod quantum;
pub mod sets;

pub use error::{Error, Result};
pub use fuzzy::{FiniteFuzzySet, Grade, TNorm, Universe};
pub use grid::GridFunction;
pub use integral::{alpha_cut, lebesgue_integral, sugeno_finite, sugeno_grid, SugenoEstimate};
pub use language::{Alphabet, FuzzyLanguage};
pub use localize::{localize, LocalizationReport, Localizer, WavefunctionSpec};
pub use measures::{Measure, TableMeasure};
pub use quantum::{FuzzyQubitState, Gate, QubitState, TwoQubitState};
pub use sets::{FiniteSubset, IntervalSet, Region};
