use rayon::prelude::*;

use crate::characterization::canonical::monotone_canonical_set;
use crate::characterization::sample::{Label, LabeledExample, Sample};
use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::logic::equiv::Equivalence;
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula};
use crate::verification::enumerate::{enumerate_formulas, EnumerationOrder};
use crate::verification::fit::{CompiledFormula, FitOptions};
use crate::verification::unique::{decide_equivalence, SearchBound};
use crate::words::embeds_word;

/// Characteristic sample: one distinguishing word against every inequivalent predecessor not already rejected.
pub fn gold_teach(f: &Formula, order: &EnumerationOrder) -> Result<Sample> {
    gold_teach_with(f, order, &SearchBound::default())
}

pub fn gold_teach_with(f: &Formula, order: &EnumerationOrder, search: &SearchBound) -> Result<Sample> {
    let ap = &order.ap;
    let all = enumerate_formulas(order);
    let j = all.iter().position(|g| g == f).ok_or_else(|| {
        Error::Enumeration(format!("{} is not enumerated within size {}", f.display(ap), order.max_size))
    })?;
    let mut sample = Sample::new(ap.clone());
    let mut words: Vec<(FiniteWord, bool)> = Vec::new();
    for g in &all[..j] {
        if words.iter().any(|(w, b)| holds(g, w) != *b) {
            continue;
        }
        match decide_equivalence(f, g, ap, search) {
            Equivalence::Equivalent => {}
            Equivalence::Distinguished(w) => {
                let b = holds(f, &w);
                debug_assert_ne!(b, holds(g, &w));
                sample.push(LabeledExample::word(w.clone(), Label::from_bool(b)));
                words.push((w, b));
            }
            Equivalence::Unknown => {
                return Err(Error::Undecided(format!(
                    "witness search against {} exhausted",
                    g.display(ap)
                )))
            }
        }
    }
    Ok(sample)
}

/// The enumeration-least formula fitting the sample.
pub fn gold_learn(s: &Sample, order: &EnumerationOrder) -> Result<Formula> {
    let all = enumerate_formulas(order);
    let found = all
        .par_iter()
        .map(|g| CompiledFormula::new(g, &s.ap).fits(s, &FitOptions::default()).map(|r| r.fits()))
        .enumerate()
        .find_first(|(_, r)| !matches!(r, Ok(false)));
    match found {
        Some((i, Ok(_))) => Ok(all[i].clone()),
        Some((_, Err(e))) => Err(e),
        None => Err(Error::Enumeration(format!("no formula of size at most {} fits the sample", order.max_size))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Confirmed { checked: usize },
    /// A word on which direct evaluation and canonical-set embedding disagree.
    Discrepancy(FiniteWord),
}

/// Exhaustively compares `⟦φ⟧` with the anchored upward closure of the canonical set on words up to `max_len`.
pub fn oracle_upward_closure(f: &Formula, ap: &Alphabet, max_len: usize) -> Result<OracleVerdict> {
    if !f.signature().is_subset(FragmentSignature::monotone()) {
        return Err(Error::Fragment { fragment: "F,F̂,∧,∨,⊤,⊥".into(), node: f.display(ap).to_string() });
    }
    let canonical = monotone_canonical_set(f)?;
    let words = ap.words_up_to(max_len);
    let bad = words.par_iter().find_first(|w| holds(f, w) != canonical.iter().any(|e| embeds_word(e, w, true)));
    Ok(match bad {
        Some(w) => OracleVerdict::Discrepancy(w.clone()),
        None => OracleVerdict::Confirmed { checked: words.len() },
    })
}
