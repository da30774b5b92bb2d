//! Positive and negative example constructions and the operator-set classification.

pub mod canonical;
pub mod characterize;
pub mod classify;
pub mod dual;
pub mod finite;
pub mod interleave;
pub mod monotone;
pub mod report;
pub mod sample;

pub use canonical::{canonical_set, minimal_words, monotone_canonical_set, prefix_reduced};
pub use characterize::{
    characterize_monotone, characterize_monotone_G, characterize_x_omega, CharacterizationReport, MonotoneOptions,
    PositivePruning,
};
pub use classify::{classify_operator_set, definability_closure, maximal_positive_sets, negative_fragments, ClassWitness, Classification};
pub use dual::{dual, dual_plus, excl_family, excl_word, DualVariant};
pub use finite::{characterize_finite_fragment, FiniteOptions};
pub use interleave::merged_interleavings;
pub use monotone::{eval_monotone, eval_monotone_G, GloballyEvaluator, MonotoneEvaluator, Target};
pub use report::{size_report, SizeReport};
pub use sample::{Label, LabeledExample, Payload, Sample};
