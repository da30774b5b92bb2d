//! Formula enumeration, fit checking, uniqueness verification, adversaries and the Gold-style teacher.

pub mod adversary;
pub mod enumerate;
pub mod fit;
pub mod gold;
pub mod unique;

pub use adversary::{adversary, alternation_formula, until_bound_formula, AdversaryOutput, Family};
pub use enumerate::{dedup_semantic, enumerate_formulas, formula_index, formulas_by_size, EnumerationOrder};
pub use fit::{fits, fits_with, CompiledFormula, FitOptions, FitReport, SchemaMode};
pub use gold::{gold_learn, gold_teach, gold_teach_with, oracle_upward_closure, OracleVerdict};
pub use unique::{
    decide_equivalence, verify_unique, verify_unique_with, SearchBound, UniqueOptions, UniquenessStatus,
    UniquenessVerdict, DEFAULT_SEARCH_WORDS,
};
