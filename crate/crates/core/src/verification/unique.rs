use rayon::prelude::*;

use crate::characterization::canonical::monotone_canonical_set;
use crate::characterization::monotone::MonotoneEvaluator;
use crate::characterization::sample::Sample;
use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::logic::equiv::{equivalent_bounded, Equivalence};
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula};
use crate::logic::rewrite::{dualize, in_strict_globally_fragment};
use crate::verification::enumerate::{enumerate_formulas, EnumerationOrder};
use crate::verification::fit::{CompiledFormula, FitOptions};

/// Word-count cap for exhaustive equivalence search.
pub const DEFAULT_SEARCH_WORDS: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Fixed word length; defaults to `2·(|φ|+|ψ|)`.
    pub max_len: Option<usize>,
    /// The length is lowered until at most this many words are searched.
    pub max_words: u64,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound { max_len: None, max_words: DEFAULT_SEARCH_WORDS }
    }
}

impl SearchBound {
    pub fn length_for(&self, f: &Formula, g: &Formula, ap: &Alphabet) -> usize {
        let wanted = self.max_len.unwrap_or(2 * (f.size() + g.size()));
        let letters = 1u64 << ap.len();
        let (mut total, mut power) = (0u64, 1u64);
        for len in 1..=wanted {
            power = power.saturating_mul(letters);
            total = total.saturating_add(power);
            if total > self.max_words {
                return (len - 1).max(1);
            }
        }
        wanted
    }
}

fn monotone_domination(cf: &[FiniteWord], cg: &[FiniteWord]) -> Option<FiniteWord> {
    let ef = MonotoneEvaluator::from_canonical(cf.to_vec());
    let eg = MonotoneEvaluator::from_canonical(cg.to_vec());
    cf.iter()
        .filter(|w| !eg.eval_word(w))
        .chain(cg.iter().filter(|w| !ef.eval_word(w)))
        .min()
        .cloned()
}

/// Fragment-driven equivalence: canonical-set domination for monotone and strict-globally formulas,
/// otherwise exhaustive search with the exactness rules of [`equivalent_bounded`].
pub fn decide_equivalence(f: &Formula, g: &Formula, ap: &Alphabet, bound: &SearchBound) -> Equivalence {
    let mono = FragmentSignature::monotone();
    if f.signature().is_subset(mono) && g.signature().is_subset(mono) {
        if let (Ok(cf), Ok(cg)) = (monotone_canonical_set(f), monotone_canonical_set(g)) {
            return monotone_domination(&cf, &cg).map_or(Equivalence::Equivalent, Equivalence::Distinguished);
        }
    }
    if in_strict_globally_fragment(f) && in_strict_globally_fragment(g) {
        if let (Ok(df), Ok(dg)) = (dualize(f), dualize(g)) {
            if let (Ok(cf), Ok(cg)) = (monotone_canonical_set(&df), monotone_canonical_set(&dg)) {
                return monotone_domination(&cf, &cg)
                    .map_or(Equivalence::Equivalent, |w| Equivalence::Distinguished(ap.complement_word(&w)));
            }
        }
    }
    equivalent_bounded(f, g, ap, bound.length_for(f, g, ap))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniquenessStatus {
    Confirmed,
    Refuted { competitor: Formula, disagreement: FiniteWord },
    /// Some fitting competitor could not be decided within the search bound.
    BoundExhausted { undecided: Formula },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessVerdict {
    pub status: UniquenessStatus,
    /// Candidates enumerated.
    pub examined: usize,
    /// Candidates that fit the sample.
    pub fitting: usize,
}

impl UniquenessVerdict {
    pub fn is_confirmed(&self) -> bool {
        self.status == UniquenessStatus::Confirmed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueOptions {
    pub max_size: usize,
    pub fit: FitOptions,
    pub search: SearchBound,
    /// Candidates are the duals of the enumerated `F̂, ∧, ∨, ⊤, ⊥` formulas.
    pub strict_globally: bool,
}

impl UniqueOptions {
    pub fn new(max_size: usize) -> Self {
        UniqueOptions { max_size, fit: FitOptions::default(), search: SearchBound::default(), strict_globally: false }
    }
}

enum Outcome {
    Rejected,
    Equivalent,
    Refuted(FiniteWord),
    Unknown,
}

pub fn verify_unique(f: &Formula, s: &Sample, ops: FragmentSignature, max_size: usize) -> Result<UniquenessVerdict> {
    verify_unique_with(f, s, ops, &UniqueOptions::new(max_size))
}

pub fn verify_unique_with(f: &Formula, s: &Sample, ops: FragmentSignature, opts: &UniqueOptions) -> Result<UniquenessVerdict> {
    let ap = &s.ap;
    let target = CompiledFormula::new(f, ap);
    if let Some(index) = target.fits(s, &opts.fit)?.first_failure {
        return Err(Error::TargetDoesNotFit { index });
    }
    let mut candidates = enumerate_formulas(&EnumerationOrder::new(ap.clone(), ops, opts.max_size));
    if opts.strict_globally {
        candidates = candidates.iter().map(dualize).collect::<Result<_>>()?;
    }
    let outcomes: Vec<Result<Outcome>> = candidates
        .par_iter()
        .map(|g| {
            if !CompiledFormula::new(g, ap).fits(s, &opts.fit)?.fits() {
                return Ok(Outcome::Rejected);
            }
            Ok(match decide_equivalence(f, g, ap, &opts.search) {
                Equivalence::Equivalent => Outcome::Equivalent,
                Equivalence::Distinguished(w) => Outcome::Refuted(w),
                Equivalence::Unknown => Outcome::Unknown,
            })
        })
        .collect();
    let mut fitting = 0;
    let mut undecided = None;
    for (g, outcome) in candidates.iter().zip(outcomes) {
        match outcome? {
            Outcome::Rejected => {}
            Outcome::Equivalent => fitting += 1,
            Outcome::Unknown => {
                fitting += 1;
                undecided.get_or_insert_with(|| g.clone());
            }
            Outcome::Refuted(w) => {
                debug_assert_ne!(holds(f, &w), holds(g, &w));
                if holds(f, &w) == holds(g, &w) {
                    return Err(Error::Invalid("refutation witness does not distinguish".into()));
                }
                let status = UniquenessStatus::Refuted { competitor: g.clone(), disagreement: w };
                return Ok(UniquenessVerdict { status, examined: candidates.len(), fitting: fitting + 1 });
            }
        }
    }
    let status = match undecided {
        Some(g) => UniquenessStatus::BoundExhausted { undecided: g },
        None => UniquenessStatus::Confirmed,
    };
    Ok(UniquenessVerdict { status, examined: candidates.len(), fitting })
}
