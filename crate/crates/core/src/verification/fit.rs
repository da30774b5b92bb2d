use crate::characterization::monotone::{GloballyEvaluator, MonotoneEvaluator};
use crate::characterization::sample::{LabeledExample, Payload, Sample};
use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula, Op};
use crate::logic::rewrite::in_strict_globally_fragment;
use crate::schematic::{schematic_fit_bounded, SchematicFit, DEFAULT_INSTANCE_LEN};
use crate::words::{FlatWord, WordExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaMode {
    /// Decide through `schematic_fit`; `unknown` is an error.
    Decide,
    /// Fit means every instance up to the given length carries the right label.
    Instances(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitOptions {
    pub schema: SchemaMode,
    /// Bounded fallback length for `schematic_fit`.
    pub schema_max_len: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { schema: SchemaMode::Decide, schema_max_len: DEFAULT_INSTANCE_LEN }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitReport {
    /// Index of the first example the formula does not fit.
    pub first_failure: Option<usize>,
}

impl FitReport {
    pub fn fits(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn next_boolean() -> FragmentSignature {
    FragmentSignature::of(&[Op::Next, Op::And, Op::Or, Op::True, Op::False])
}

/// A formula prepared for repeated evaluation on sample payloads.
#[derive(Clone, Debug)]
pub struct CompiledFormula {
    formula: Formula,
    ap: Alphabet,
    monotone: Option<MonotoneEvaluator>,
    globally: Option<GloballyEvaluator>,
    x_prefix: Option<usize>,
}

impl CompiledFormula {
    pub fn new(f: &Formula, ap: &Alphabet) -> Self {
        let monotone = if f.signature().is_subset(FragmentSignature::monotone()) {
            MonotoneEvaluator::new(f).ok()
        } else {
            None
        };
        let globally =
            if monotone.is_none() && in_strict_globally_fragment(f) { GloballyEvaluator::new(f, ap).ok() } else { None };
        let x_prefix = f.signature().is_subset(next_boolean()).then(|| f.next_depth() + 1);
        CompiledFormula { formula: f.clone(), ap: ap.clone(), monotone, globally, x_prefix }
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn eval_word(&self, w: &FiniteWord) -> Result<bool> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(match &self.monotone {
            Some(m) => m.eval_word(w),
            None => holds(&self.formula, w),
        })
    }

    pub fn eval_flat(&self, t: &FlatWord) -> Result<bool> {
        if t.is_finite() {
            return self.eval_word(&t.unfold(1));
        }
        if let Some(m) = &self.monotone {
            return Ok(m.eval_flat(t));
        }
        if let Some(g) = &self.globally {
            return Ok(g.eval_flat(t));
        }
        if let Some(n) = self.x_prefix {
            return Ok(holds(&self.formula, &t.unfold(n)));
        }
        Err(Error::Unevaluable {
            formula: self.formula.display(&self.ap).to_string(),
            payload: t.to_expr().map_or_else(String::new, |e| e.display(&self.ap)),
        })
    }

    pub fn eval_expr(&self, e: &WordExpr) -> Result<bool> {
        self.eval_flat(&e.to_flat()?)
    }

    pub fn example_fits(&self, ex: &LabeledExample, opts: &FitOptions) -> Result<bool> {
        let wanted = ex.label.is_positive();
        match &ex.payload {
            Payload::Word(w) => Ok(self.eval_word(w)? == wanted),
            Payload::Expr(e) => Ok(self.eval_expr(e)? == wanted),
            Payload::Schema(r) => match opts.schema {
                SchemaMode::Instances(len) => {
                    Ok(r.instances(&self.ap, len).iter().all(|w| holds(&self.formula, w) == wanted))
                }
                SchemaMode::Decide => {
                    match schematic_fit_bounded(&self.formula, r, ex.label, &self.ap, opts.schema_max_len) {
                        SchematicFit::Fits => Ok(true),
                        SchematicFit::Fails(_) => Ok(false),
                        SchematicFit::Unknown => Err(Error::Undecided(format!(
                            "fit of {} on schema {}",
                            self.formula.display(&self.ap),
                            r.display(&self.ap)
                        ))),
                    }
                }
            },
        }
    }

    pub fn fits(&self, s: &Sample, opts: &FitOptions) -> Result<FitReport> {
        for (i, ex) in s.examples().iter().enumerate() {
            if !self.example_fits(ex, opts)? {
                return Ok(FitReport { first_failure: Some(i) });
            }
        }
        Ok(FitReport { first_failure: None })
    }
}

pub fn fits(f: &Formula, s: &Sample) -> Result<FitReport> {
    fits_with(f, s, &FitOptions::default())
}

pub fn fits_with(f: &Formula, s: &Sample, opts: &FitOptions) -> Result<FitReport> {
    CompiledFormula::new(f, &s.ap).fits(s, opts)
}
