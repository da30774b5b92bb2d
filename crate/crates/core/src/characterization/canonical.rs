use std::collections::BTreeSet;

use crate::characterization::interleave::merged_interleavings;
use crate::error::{Error, Result};
use crate::logic::alphabet::{FiniteWord, Letter};
use crate::logic::formula::Formula;
use crate::logic::rewrite::{rewrite_for_fragment, RewriteTarget};
use crate::words::embeds_word;

/// `E_can(φ)` for φ in `F̂, ∧, ∨, ⊤, ⊥`, sorted shortlex and deduplicated.
pub fn canonical_set(f: &Formula) -> Result<Vec<FiniteWord>> {
    Ok(canonical(f)?.into_iter().collect())
}

fn canonical(f: &Formula) -> Result<BTreeSet<FiniteWord>> {
    Ok(match f {
        Formula::False => BTreeSet::new(),
        Formula::True => BTreeSet::from([FiniteWord(vec![Letter::EMPTY])]),
        Formula::Atom(a) => BTreeSet::from([FiniteWord(vec![Letter::singleton(*a)])]),
        Formula::StrictEventually(c) => canonical(c)?.into_iter().map(|w| w.prepend(Letter::EMPTY)).collect(),
        Formula::Or(a, b) => {
            let mut s = canonical(a)?;
            s.extend(canonical(b)?);
            s
        }
        Formula::And(a, b) => {
            let (x, y) = (canonical(a)?, canonical(b)?);
            let mut s = BTreeSet::new();
            for u in &x {
                for v in &y {
                    s.extend(merged_interleavings(u, v)?);
                }
            }
            s
        }
        _ => {
            return Err(Error::Fragment { fragment: "F̂,∧,∨,⊤,⊥".into(), node: format!("{f:?}") });
        }
    })
}

/// Rewrites `F` away and returns the canonical set of the result.
pub fn monotone_canonical_set(f: &Formula) -> Result<Vec<FiniteWord>> {
    canonical_set(&rewrite_for_fragment(f, RewriteTarget::StrictEventually)?)
}

/// Removes every word that has another member as a proper prefix.
pub fn prefix_reduced(words: &[FiniteWord]) -> Vec<FiniteWord> {
    words
        .iter()
        .filter(|w| !words.iter().any(|v| v.len() < w.len() && w.letters().starts_with(v.letters())))
        .cloned()
        .collect()
}

/// Removes every word into which another member anchored-embeds.
pub fn minimal_words(words: &[FiniteWord]) -> Vec<FiniteWord> {
    words
        .iter()
        .filter(|w| !words.iter().any(|v| v != *w && embeds_word(v, w, true)))
        .cloned()
        .collect()
}
