use crate::characterization::characterize::CharacterizationReport;
use crate::characterization::classify::maximal_positive_sets;
use crate::characterization::sample::{Label, LabeledExample, Sample};
use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord, Letter};
use crate::logic::equiv::Equivalence;
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula};
use crate::verification::enumerate::{enumerate_formulas, EnumerationOrder};
use crate::verification::unique::{decide_equivalence, SearchBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteOptions {
    /// Competitor size bound; the default depends on the fragment.
    pub max_size: Option<usize>,
    pub search: SearchBound,
    /// Maximal number of competitors examined.
    pub budget: u64,
}

impl Default for FiniteOptions {
    fn default() -> Self {
        FiniteOptions { max_size: None, search: SearchBound::default(), budget: 200_000 }
    }
}

fn first_atom(f: &Formula) -> usize {
    match f {
        Formula::Atom(a) => *a,
        _ => f.children().into_iter().map(first_atom).min().unwrap_or(0),
    }
}

fn power(l: Letter, n: usize) -> FiniteWord {
    FiniteWord::repeat(l, n)
}

/// Fragment-shaped seed examples (words only; the empty word is never emitted).
fn seed_words(item: usize, f: &Formula, ap: &Alphabet) -> Vec<FiniteWord> {
    let full = ap.full();
    let a = Letter::singleton(first_atom(f));
    match item {
        1 | 4 => vec![power(full, f.temporal_depth() + 1)],
        5 => {
            let n = f.next_depth();
            let mut v = vec![FiniteWord::new(vec![a])];
            v.extend((1..=n).map(|k| power(Letter::EMPTY, k)));
            v.push(power(Letter::EMPTY, n).concat(&FiniteWord::new(vec![a])));
            v.push(power(Letter::EMPTY, n + 1));
            v
        }
        6 => {
            let n = f.temporal_depth();
            let m = n.saturating_sub(1).max(1);
            vec![
                FiniteWord::new(vec![a]),
                power(Letter::EMPTY, m),
                power(full, m),
                power(Letter::EMPTY, n).concat(&FiniteWord::new(vec![a])),
                power(Letter::EMPTY, n + 1),
            ]
        }
        _ => Vec::new(),
    }
}

fn default_max_size(item: usize, f: &Formula, ap: &Alphabet) -> usize {
    let n = f.temporal_depth();
    let size = f.size();
    match item {
        1 => size + 1,
        2 => (3 * ap.len()).max(size),
        3 => size.max(6),
        4 => size.max(n + 2),
        5 => size.max(n + 3) + 2,
        _ => size.max(n + 4),
    }
}

/// Adds a distinguishing word for every competitor that fits the current sample but is not equivalent.
fn complete(
    f: &Formula,
    sample: &mut Sample,
    candidates: &[Formula],
    search: &SearchBound,
) -> Result<u64> {
    let ap = sample.ap.clone();
    let mut words: Vec<(FiniteWord, bool)> = Vec::new();
    for ex in sample.examples() {
        if let crate::characterization::sample::Payload::Word(w) = &ex.payload {
            words.push((w.clone(), ex.label.is_positive()));
        }
    }
    let mut work = 0u64;
    for g in candidates {
        work += 1;
        if words.iter().any(|(w, b)| holds(g, w) != *b) {
            continue;
        }
        match decide_equivalence(f, g, &ap, search) {
            Equivalence::Equivalent => {}
            Equivalence::Distinguished(w) => {
                let b = holds(f, &w);
                sample.push(LabeledExample::word(w.clone(), Label::from_bool(b)));
                words.push((w, b));
            }
            Equivalence::Unknown => {
                return Err(Error::Undecided(format!(
                    "no distinguishing word for {} within the search bound",
                    g.display(&ap)
                )))
            }
        }
    }
    Ok(work)
}

/// Characterization of `φ` relative to `LTL_O` for `O` inside one of the six maximal positive sets.
pub fn characterize_finite_fragment(
    f: &Formula,
    ops: FragmentSignature,
    ap: &Alphabet,
    opts: &FiniteOptions,
) -> Result<CharacterizationReport> {
    let item = maximal_positive_sets()
        .iter()
        .position(|s| ops.is_subset(*s))
        .map(|i| i + 1)
        .ok_or_else(|| Error::Classification(format!("{ops} is not contained in a maximal positive set")))?;
    if !f.signature().is_subset(ops) {
        return Err(Error::Fragment { fragment: ops.to_string(), node: f.display(ap).to_string() });
    }
    let max_size = opts.max_size.unwrap_or_else(|| default_max_size(item, f, ap));
    let candidates = enumerate_formulas(&EnumerationOrder::new(ap.clone(), ops, max_size));
    if candidates.len() as u64 > opts.budget {
        return Err(Error::Budget(opts.budget));
    }
    let mut sample = Sample::new(ap.clone());
    for w in seed_words(item, f, ap) {
        let label = Label::from_bool(holds(f, &w));
        sample.push(LabeledExample::word(w, label));
    }
    let work = complete(f, &mut sample, &candidates, &opts.search)?;
    Ok(CharacterizationReport::from_sample(sample.sorted(), work))
}
