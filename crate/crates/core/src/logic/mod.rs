//! Formulas, parsing, finite-word semantics and rewrites.

pub mod alphabet;
pub mod equiv;
pub mod eval;
pub mod formula;
pub mod parser;
pub mod rewrite;

pub use alphabet::{Alphabet, FiniteWord, Letter};
pub use equiv::{bound_is_exact, equivalent_bounded, Equivalence};
pub use eval::{eval_finite, truth_table};
pub use formula::{FragmentSignature, Formula, Op};
pub use parser::parse_formula;
pub use rewrite::{dualize, in_strict_eventually_fragment, in_strict_globally_fragment, rewrite_for_fragment, RewriteTarget};
