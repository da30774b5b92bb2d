use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula, Op};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Distinguished(FiniteWord),
    Unknown,
}

fn next_boolean() -> FragmentSignature {
    FragmentSignature::of(&[Op::Next, Op::And, Op::Or, Op::Not, Op::True, Op::False])
}

fn is_unary_chain(f: &Formula) -> bool {
    match f {
        Formula::True | Formula::False | Formula::Atom(_) => true,
        Formula::Not(c) | Formula::Next(c) | Formula::Eventually(c) | Formula::StrictEventually(c) => is_unary_chain(c),
        _ => false,
    }
}

/// Unary chains over `F, F̂, X`, or over `¬` and a single temporal operator.
fn chain_bound_applies(f: &Formula, g: &Formula) -> bool {
    if !is_unary_chain(f) || !is_unary_chain(g) {
        return false;
    }
    let sig = f.signature().union(g.signature());
    if !sig.contains(Op::Not) {
        return true;
    }
    sig.ops().filter(|o| o.is_temporal()).count() <= 1
}

/// Whether agreement on all words of length `1..=max_len` implies equivalence over finite words.
pub fn bound_is_exact(f: &Formula, g: &Formula, max_len: usize) -> bool {
    let both_in = |sig: FragmentSignature| f.signature().is_subset(sig) && g.signature().is_subset(sig);
    if both_in(FragmentSignature::monotone()) && f.size().max(g.size()) <= max_len {
        return true;
    }
    if both_in(next_boolean()) && f.next_depth().max(g.next_depth()) < max_len {
        return true;
    }
    chain_bound_applies(f, g) && f.temporal_depth().max(g.temporal_depth()) + 2 <= max_len
}

/// Compares two formulas on every word of length `1..=max_len`; the first difference in shortlex order is returned.
pub fn equivalent_bounded(f: &Formula, g: &Formula, ap: &Alphabet, max_len: usize) -> Equivalence {
    for len in 1..=max_len {
        if let Some(w) = ap.words_of_len(len).into_iter().find(|w| holds(f, w) != holds(g, w)) {
            return Equivalence::Distinguished(w);
        }
    }
    if bound_is_exact(f, g, max_len) {
        Equivalence::Equivalent
    } else {
        Equivalence::Unknown
    }
}
