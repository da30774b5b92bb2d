use crate::characterization::canonical::{canonical_set, minimal_words, prefix_reduced};
use crate::characterization::dual::{dual, DualVariant};
use crate::characterization::monotone::MonotoneEvaluator;
use crate::characterization::sample::{Label, LabeledExample, Payload, Sample};
use crate::error::{Error, Result};
use crate::logic::alphabet::Alphabet;
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula, Op};
use crate::logic::rewrite::{dualize, rewrite_for_fragment, RewriteTarget};
use crate::words::{complement_word, FlatWord, WordExpr};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PositivePruning {
    /// Keep the full canonical set.
    None,
    /// Drop canonical words that extend another canonical word.
    #[default]
    Prefix,
    /// Keep only the ≤hom-minimal canonical words.
    Minimal,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MonotoneOptions {
    pub variant: DualVariant,
    pub pruning: PositivePruning,
    /// Upper bound on the number of negative examples.
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub sample: Sample,
    pub positives: usize,
    pub negatives: usize,
    /// Longest finite positive example.
    pub max_word_len: usize,
    /// Largest word-expression payload.
    pub max_expr_size: usize,
    /// Work units spent (constructions and checks).
    pub work: u64,
}

impl CharacterizationReport {
    pub fn from_sample(sample: Sample, work: u64) -> Self {
        let positives = sample.positives().count();
        let negatives = sample.negatives().count();
        let max_word_len = sample
            .positives()
            .filter_map(|p| match p {
                Payload::Word(w) => Some(w.len()),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        let max_expr_size = sample
            .examples()
            .iter()
            .filter_map(|e| match &e.payload {
                Payload::Expr(x) => Some(x.size()),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        CharacterizationReport { sample, positives, negatives, max_word_len, max_expr_size, work }
    }
}

pub(crate) fn flat_payload(v: &FlatWord) -> Payload {
    if v.is_finite() {
        Payload::Word(v.unfold(1))
    } else {
        Payload::Expr(v.to_expr().expect("nonempty"))
    }
}

/// Canonical words as positives and the dual of the (pruned) canonical set as negatives.
pub fn characterize_monotone(f: &Formula, ap: &Alphabet, opts: &MonotoneOptions) -> Result<CharacterizationReport> {
    let g = rewrite_for_fragment(f, RewriteTarget::StrictEventually)?;
    let raw = canonical_set(&g)?;
    let positives = match opts.pruning {
        PositivePruning::None => raw.clone(),
        PositivePruning::Prefix => prefix_reduced(&raw),
        PositivePruning::Minimal => minimal_words(&raw),
    };
    let negatives = dual(&positives, ap, opts.variant);
    if let Some(limit) = opts.budget {
        if negatives.len() as u64 > limit {
            return Err(Error::Budget(limit));
        }
    }
    let eval = MonotoneEvaluator::from_canonical(raw);
    if let Some(bad) = positives.iter().find(|w| !holds(f, w)) {
        return Err(Error::Invalid(format!("canonical word {} falsifies the formula", ap.fmt_word(bad))));
    }
    if let Some(bad) = negatives.iter().find(|v| eval.eval_flat(v)) {
        return Err(Error::Invalid(format!("dual word {:?} satisfies the formula", bad)));
    }
    let work = (positives.len() + negatives.len()) as u64;
    let mut sample = Sample::new(ap.clone());
    sample.extend(positives.into_iter().map(|w| LabeledExample::word(w, Label::Positive)));
    sample.extend(negatives.iter().map(|v| LabeledExample::new(flat_payload(v), Label::Negative)));
    Ok(CharacterizationReport::from_sample(sample.sorted(), work))
}

/// Characterizes a `Ĝ, ∧, ∨, ⊤, ⊥` formula through its dual: complemented payloads, swapped labels.
#[allow(non_snake_case)]
pub fn characterize_monotone_G(f: &Formula, ap: &Alphabet, opts: &MonotoneOptions) -> Result<CharacterizationReport> {
    let chi = dualize(&rewrite_for_fragment(f, RewriteTarget::StrictGlobally)?)?;
    let inner = characterize_monotone(&chi, ap, opts)?;
    let mut sample = Sample::new(ap.clone());
    for ex in inner.sample.examples() {
        let payload = match &ex.payload {
            Payload::Word(w) => Payload::Word(ap.complement_word(w)),
            Payload::Expr(e) => Payload::Expr(complement_word(e, ap)),
            Payload::Schema(_) => unreachable!("monotone characterizations emit no schemas"),
        };
        sample.push(LabeledExample::new(payload, ex.label.flip()));
    }
    Ok(CharacterizationReport::from_sample(sample.sorted(), inner.work))
}

fn next_boolean() -> FragmentSignature {
    FragmentSignature::of(&[Op::Next, Op::And, Op::Or, Op::True, Op::False])
}

/// All words up to length `n = X-depth + 1`, plus `w·∅^ω` and `w·(AP)^ω` for every word of length `n`.
pub fn characterize_x_omega(f: &Formula, ap: &Alphabet, budget: u64) -> Result<CharacterizationReport> {
    if !f.signature().is_subset(next_boolean()) {
        return Err(Error::Fragment { fragment: "X,∧,∨,⊤,⊥".into(), node: format!("{f:?}") });
    }
    let n = f.next_depth() + 1;
    let letters = 1u64 << ap.len();
    let mut cost: u64 = 0;
    for len in 1..=n {
        cost = cost.saturating_add(letters.saturating_pow(len as u32));
    }
    cost = cost.saturating_add(2u64.saturating_mul(letters.saturating_pow(n as u32)));
    if cost > budget {
        return Err(Error::Budget(budget));
    }
    let mut sample = Sample::new(ap.clone());
    for w in ap.words_up_to(n) {
        sample.push(LabeledExample::word(w.clone(), Label::from_bool(holds(f, &w))));
    }
    for w in ap.words_of_len(n) {
        let label = Label::from_bool(holds(f, &w));
        for fill in [crate::logic::Letter::EMPTY, ap.full()] {
            let tail = WordExpr::omega(WordExpr::Lit(fill));
            let e = WordExpr::concat_all(vec![WordExpr::from_word(&w).expect("nonempty"), tail]).expect("nonempty");
            sample.push(LabeledExample::expr(e, label));
        }
    }
    Ok(CharacterizationReport::from_sample(sample.sorted(), cost))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterization::monotone::eval_monotone_G;
    use crate::logic::parse_formula;

    #[test]
    fn worked_example_positives() {
        let ap = Alphabet::parse("p,q,r").unwrap();
        let f = parse_formula("F(p & q & F(r & F(p & q)))", &ap).unwrap();
        let r = characterize_monotone(&f, &ap, &MonotoneOptions::default()).unwrap();
        assert_eq!(r.positives, 6);
        assert!(r.negatives > 0);
        assert_eq!(r.max_word_len, 4);
    }

    #[test]
    fn small_cases() {
        let ap = Alphabet::parse("p,q").unwrap();
        let opts = MonotoneOptions::default();
        let bot = characterize_monotone(&Formula::False, &ap, &opts).unwrap();
        assert_eq!(bot.positives, 0);
        assert_eq!(bot.sample.to_string(), "ap: p q\n- expr {} . {p,q}^w\n- expr {q} . {p,q}^w\n- expr {p} . {p,q}^w\n- expr {p,q} . {p,q}^w\n");
        let p = characterize_monotone(&Formula::Atom(0), &ap, &opts).unwrap();
        assert!(p.sample.to_string().contains("- expr {} . {p,q}^w"));
        assert!(p.sample.to_string().contains("+ word {p}"));
    }

    #[test]
    fn globally_positives_satisfy() {
        let ap = Alphabet::parse("p").unwrap();
        let f = parse_formula("sG p", &ap).unwrap();
        let r = characterize_monotone_G(&f, &ap, &MonotoneOptions::default()).unwrap();
        for ex in r.sample.examples() {
            let value = match &ex.payload {
                Payload::Word(w) => eval_monotone_G(&f, w, &ap).unwrap(),
                Payload::Expr(e) => eval_monotone_G(&f, e, &ap).unwrap(),
                Payload::Schema(_) => unreachable!(),
            };
            assert_eq!(value, ex.label.is_positive());
        }
    }

    #[test]
    fn x_omega_shapes() {
        let ap = Alphabet::parse("p").unwrap();
        let f = parse_formula("X p", &ap).unwrap();
        let r = characterize_x_omega(&f, &ap, 1000).unwrap();
        let text = r.sample.to_string();
        assert!(text.contains("- word {p}\n"));
        assert!(text.contains("+ expr {} . {p} . {}^w"));
        let top = characterize_x_omega(&Formula::True, &ap, 1000).unwrap();
        assert_eq!(top.negatives, 0);
        assert!(characterize_x_omega(&f, &ap, 3).is_err());
    }
}
