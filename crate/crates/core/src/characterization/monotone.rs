use crate::characterization::canonical::monotone_canonical_set;
use crate::error::Result;
use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::logic::formula::Formula;
use crate::logic::rewrite::{dualize, rewrite_for_fragment, RewriteTarget};
use crate::words::{embeds_in, embeds_word, FlatWord, WordExpr};

#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Word(&'a FiniteWord),
    Expr(&'a WordExpr),
}

impl<'a> From<&'a FiniteWord> for Target<'a> {
    fn from(w: &'a FiniteWord) -> Self {
        Target::Word(w)
    }
}

impl<'a> From<&'a WordExpr> for Target<'a> {
    fn from(e: &'a WordExpr) -> Self {
        Target::Expr(e)
    }
}

/// A monotone formula compiled to its canonical set.
#[derive(Clone, Debug)]
pub struct MonotoneEvaluator {
    canonical: Vec<FiniteWord>,
    max_len: usize,
}

impl MonotoneEvaluator {
    pub fn new(f: &Formula) -> Result<Self> {
        Ok(Self::from_canonical(monotone_canonical_set(f)?))
    }

    pub fn from_canonical(canonical: Vec<FiniteWord>) -> Self {
        let max_len = canonical.iter().map(FiniteWord::len).max().unwrap_or(0);
        MonotoneEvaluator { canonical, max_len }
    }

    pub fn canonical(&self) -> &[FiniteWord] {
        &self.canonical
    }

    /// Longest canonical word; unfoldings with at least this many copies decide every embedding.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn eval_word(&self, w: &FiniteWord) -> bool {
        self.canonical.iter().any(|e| embeds_word(e, w, true))
    }

    /// Evaluates on an unfolding that already has at least [`Self::max_len`] copies of every ω-block.
    pub fn eval_unfolded(&self, w: &[crate::logic::Letter]) -> bool {
        self.canonical.iter().any(|e| embeds_in(e.letters(), w, true))
    }

    pub fn eval_flat(&self, t: &FlatWord) -> bool {
        self.eval_unfolded(t.unfold(self.max_len.max(1)).letters())
    }

    pub fn eval(&self, t: Target<'_>) -> Result<bool> {
        Ok(match t {
            Target::Word(w) => self.eval_word(w),
            Target::Expr(e) => self.eval_flat(&e.to_flat()?),
        })
    }

    /// A canonical word that anchored-embeds into `t`.
    pub fn witness_flat(&self, t: &FlatWord) -> Option<&FiniteWord> {
        let w = t.unfold(self.max_len.max(1));
        self.canonical.iter().find(|e| embeds_word(e, &w, true))
    }
}

/// True iff some canonical word of φ anchored-embeds into the target.
pub fn eval_monotone<'a>(f: &Formula, target: impl Into<Target<'a>>) -> Result<bool> {
    MonotoneEvaluator::new(f)?.eval(target.into())
}

/// A `Ĝ, ∧, ∨, ⊤, ⊥` formula compiled through its dual.
#[derive(Clone, Debug)]
pub struct GloballyEvaluator {
    dual: MonotoneEvaluator,
    ap: Alphabet,
}

impl GloballyEvaluator {
    pub fn new(f: &Formula, ap: &Alphabet) -> Result<Self> {
        let g = rewrite_for_fragment(f, RewriteTarget::StrictGlobally)?;
        Ok(GloballyEvaluator { dual: MonotoneEvaluator::new(&dualize(&g)?)?, ap: ap.clone() })
    }

    pub fn dual(&self) -> &MonotoneEvaluator {
        &self.dual
    }

    pub fn eval_word(&self, w: &FiniteWord) -> bool {
        !self.dual.eval_word(&self.ap.complement_word(w))
    }

    pub fn eval_flat(&self, t: &FlatWord) -> bool {
        !self.dual.eval_flat(&t.complement(&self.ap))
    }

    pub fn eval(&self, t: Target<'_>) -> Result<bool> {
        Ok(match t {
            Target::Word(w) => self.eval_word(w),
            Target::Expr(e) => self.eval_flat(&e.to_flat()?),
        })
    }
}

/// `¬ eval_monotone(dualize(φ), complement(target))`.
#[allow(non_snake_case)]
pub fn eval_monotone_G<'a>(f: &Formula, target: impl Into<Target<'a>>, ap: &Alphabet) -> Result<bool> {
    GloballyEvaluator::new(f, ap)?.eval(target.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    #[test]
    fn worked_examples() {
        let ap = Alphabet::parse("p,q").unwrap();
        let f = |s| parse_formula(s, &ap).unwrap();
        let e = |s| WordExpr::parse(s, &ap).unwrap();
        let w = |s| ap.parse_word(s).unwrap();
        assert!(eval_monotone(&f("sF p"), &e("{q}^w.{p}.{q}^w")).unwrap());
        assert!(eval_monotone(&f("F p"), &e("{}^w.{p}")).unwrap());
        assert!(!eval_monotone(&f("p & q"), &w("{p}.{q}")).unwrap());
        assert!(eval_monotone(&f("X p"), &w("{p}")).is_err());

        assert!(eval_monotone_G(&f("sG p"), &w("{p}.{p}"), &ap).unwrap());
        assert!(!eval_monotone_G(&f("sG p"), &w("{p}.{}.{p}"), &ap).unwrap());
        assert!(eval_monotone_G(&f("true"), &e("{}^w"), &ap).unwrap());
        assert!(!eval_monotone_G(&f("sG p"), &e("{p}.{}^w"), &ap).unwrap());
    }
}
