use std::collections::BTreeMap;

use crate::characterization::characterize::{characterize_monotone, MonotoneOptions};
use crate::characterization::monotone::MonotoneEvaluator;
use crate::characterization::sample::{Label, LabeledExample, Payload, Sample};
use crate::error::Result;
use crate::logic::alphabet::{Alphabet, FiniteWord, Letter};
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula};
use crate::schematic::expr::{translate_schematic, SchematicExpr};
use crate::words::WordExpr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchematicFit {
    Fits,
    Fails(FiniteWord),
    Unknown,
}

/// Instance length used by the bounded fallback of [`schematic_fit`].
pub const DEFAULT_INSTANCE_LEN: usize = 6;

pub fn schematic_fit(f: &Formula, r: &SchematicExpr, label: Label, ap: &Alphabet) -> SchematicFit {
    schematic_fit_bounded(f, r, label, ap, DEFAULT_INSTANCE_LEN)
}

/// Deterministic automaton for a monotone formula: greedy anchored-embedding progress per canonical word.
struct ProgressDfa {
    canonical: Vec<FiniteWord>,
}

const DEAD: u8 = u8::MAX;

impl ProgressDfa {
    fn new(f: &Formula) -> Option<Self> {
        if !f.signature().is_subset(FragmentSignature::monotone()) {
            return None;
        }
        let m = MonotoneEvaluator::new(f).ok()?;
        Some(ProgressDfa { canonical: m.canonical().to_vec() })
    }

    fn step(&self, state: Option<&[u8]>, l: Letter) -> Vec<u8> {
        match state {
            None => self.canonical.iter().map(|e| if e[0].is_subset(l) { 1 } else { DEAD }).collect(),
            Some(s) => s
                .iter()
                .zip(&self.canonical)
                .map(|(&j, e)| if j != DEAD && (j as usize) < e.len() && e[j as usize].is_subset(l) { j + 1 } else { j })
                .collect(),
        }
    }

    fn accepts(&self, s: &[u8]) -> bool {
        s.iter().zip(&self.canonical).any(|(&j, e)| j as usize == e.len())
    }
}

type States = BTreeMap<Option<Vec<u8>>, FiniteWord>;

fn offer(map: &mut States, state: Option<Vec<u8>>, w: FiniteWord) {
    match map.get(&state) {
        Some(old) if *old <= w => {}
        _ => {
            map.insert(state, w);
        }
    }
}

fn run(dfa: &ProgressDfa, r: &SchematicExpr, ap: &Alphabet, input: &States) -> States {
    match r {
        SchematicExpr::Sym(b) => {
            let letters = b.letters(ap);
            let mut out = States::new();
            for (s, w) in input {
                for &l in &letters {
                    let next = dfa.step(s.as_deref(), l);
                    let mut w2 = w.0.clone();
                    w2.push(l);
                    offer(&mut out, Some(next), FiniteWord(w2));
                }
            }
            out
        }
        SchematicExpr::Seq(items) => items.iter().fold(input.clone(), |acc, item| run(dfa, item, ap, &acc)),
        SchematicExpr::Star(c) => {
            let mut all = input.clone();
            let mut frontier = input.clone();
            while !frontier.is_empty() {
                let reached = run(dfa, c, ap, &frontier);
                frontier = reached.into_iter().filter(|(s, _)| !all.contains_key(s)).collect();
                for (s, w) in &frontier {
                    offer(&mut all, s.clone(), w.clone());
                }
            }
            all
        }
    }
}

/// Exact decision for monotone formulas via the product of the schema with [`ProgressDfa`].
fn monotone_fit(dfa: &ProgressDfa, r: &SchematicExpr, label: Label, ap: &Alphabet) -> SchematicFit {
    let start = States::from([(None, FiniteWord::empty())]);
    let reached = run(dfa, r, ap, &start);
    let wanted = label.is_positive();
    reached
        .into_iter()
        .filter_map(|(s, w)| s.map(|s| (s, w)))
        .filter(|(s, _)| dfa.accepts(s) != wanted)
        .map(|(_, w)| w)
        .min()
        .map_or(SchematicFit::Fits, SchematicFit::Fails)
}

/// Exact for monotone formulas and for star-free schemas; otherwise instances up to `max_len` are searched
/// and only a failure is conclusive.
pub fn schematic_fit_bounded(f: &Formula, r: &SchematicExpr, label: Label, ap: &Alphabet, max_len: usize) -> SchematicFit {
    if let Some(dfa) = ProgressDfa::new(f) {
        return monotone_fit(&dfa, r, label, ap);
    }
    let wanted = label.is_positive();
    if r.is_star_free() {
        let bound = star_free_len(r);
        return match r.instances(ap, bound).into_iter().find(|w| holds(f, w) != wanted) {
            Some(w) => SchematicFit::Fails(w),
            None => SchematicFit::Fits,
        };
    }
    match r.instances(ap, max_len).into_iter().find(|w| holds(f, w) != wanted) {
        Some(w) => SchematicFit::Fails(w),
        None => SchematicFit::Unknown,
    }
}

fn star_free_len(r: &SchematicExpr) -> usize {
    match r {
        SchematicExpr::Sym(_) => 1,
        SchematicExpr::Seq(items) => items.iter().map(star_free_len).sum(),
        SchematicExpr::Star(_) => 0,
    }
}

fn word_schema(w: &FiniteWord, ap: &Alphabet) -> Result<SchematicExpr> {
    let e = WordExpr::from_word(w).ok_or(crate::error::Error::EmptyWord)?;
    translate_schematic(&e, ap)
}

/// Finite positives become star-free schemas and negative word expressions their translations.
pub fn characterize_schematic(f: &Formula, ap: &Alphabet, opts: &MonotoneOptions) -> Result<Sample> {
    let report = characterize_monotone(f, ap, opts)?;
    let mut out = Sample::new(ap.clone());
    for ex in report.sample.examples() {
        let schema = match &ex.payload {
            Payload::Word(w) => word_schema(w, ap)?,
            Payload::Expr(e) => translate_schematic(e, ap)?,
            Payload::Schema(s) => s.clone(),
        };
        out.push(LabeledExample::new(Payload::Schema(schema), ex.label));
    }
    Ok(out.sorted())
}
