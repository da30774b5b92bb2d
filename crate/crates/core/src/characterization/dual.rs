use std::collections::{BTreeSet, HashMap};

use crate::logic::alphabet::{Alphabet, FiniteWord, Letter};
use crate::words::{FlatWord, Segment, WordExpr};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualVariant {
    /// Drops words whose first letter is blocked and closes the degenerate cases of `Dual⁺`.
    #[default]
    Corrected,
    /// The literal definition: blocked words are carried into the recursive call.
    Paper,
}

/// `Excl(σ₁..σ_k)` in canonical letter order; `None` when some `σ_i` is empty.
pub fn excl_family(firsts: &[Letter], ap: &Alphabet) -> Option<Vec<Letter>> {
    if firsts.iter().any(|l| l.is_empty()) {
        return None;
    }
    let mut family = BTreeSet::from([ap.full()]);
    for sigma in firsts {
        family = family.iter().flat_map(|b| sigma.atoms().map(move |p| b.without(p))).collect();
    }
    Some(family.into_iter().collect())
}

/// `(B₁·…·B_t)^ω` for the exclusion family, or `None` if it is empty.
pub fn excl_word(firsts: &[Letter], ap: &Alphabet) -> Option<WordExpr> {
    let family = excl_family(firsts, ap)?;
    let period = WordExpr::concat_all(family.into_iter().map(WordExpr::Lit).collect())?;
    Some(WordExpr::omega(period))
}

fn normalize(words: impl IntoIterator<Item = FiniteWord>) -> Vec<FiniteWord> {
    let set: BTreeSet<FiniteWord> = words.into_iter().collect();
    set.into_iter().collect()
}

fn full_omega(ap: &Alphabet) -> FlatWord {
    FlatWord(vec![Segment::Omega(vec![ap.full()])])
}

struct DualPlus<'a> {
    ap: &'a Alphabet,
    variant: DualVariant,
    letters: Vec<Letter>,
    memo: HashMap<Vec<FiniteWord>, Vec<FlatWord>>,
}

impl DualPlus<'_> {
    fn run(&mut self, a: Vec<FiniteWord>) -> Vec<FlatWord> {
        if let Some(hit) = self.memo.get(&a) {
            return hit.clone();
        }
        let out = self.compute(&a);
        self.memo.insert(a, out.clone());
        out
    }

    fn compute(&mut self, a: &[FiniteWord]) -> Vec<FlatWord> {
        if a.iter().any(FiniteWord::is_empty) {
            return Vec::new();
        }
        if a.is_empty() {
            return vec![full_omega(self.ap)];
        }
        let firsts: Vec<Letter> = a.iter().map(|w| w[0]).collect();
        let family = excl_family(&firsts, self.ap);
        let prefix = FlatWord(family.iter().map(|f| Segment::Omega(f.clone())).collect());
        let corrected = self.variant == DualVariant::Corrected;
        if a.iter().all(|w| w.len() == 1) {
            return if family.is_some() || corrected { vec![prefix] } else { Vec::new() };
        }
        let mut out = BTreeSet::new();
        for sigma in self.letters.clone() {
            if family.as_ref().is_some_and(|f| f.iter().any(|&b| sigma.is_subset(b))) {
                continue;
            }
            let pruned = normalize(a.iter().map(|w| if w[0].is_subset(sigma) { w.tail() } else { w.clone() }));
            if pruned.iter().any(FiniteWord::is_empty) {
                continue;
            }
            let head = prefix.concat(&FlatWord(vec![Segment::Letter(sigma)]));
            for v in self.run(pruned) {
                out.insert(head.concat(&v));
            }
        }
        if out.is_empty() && corrected {
            out.insert(prefix);
        }
        out.into_iter().collect()
    }
}

/// Maximal words avoiding every free embedding of `a`. Outputs may be finite (even empty) when the
/// corrected variant has to block a word starting with the empty letter.
pub fn dual_plus(a: &[FiniteWord], ap: &Alphabet, variant: DualVariant) -> Vec<FlatWord> {
    let mut dp = DualPlus { ap, variant, letters: ap.letters(), memo: HashMap::new() };
    dp.run(normalize(a.iter().cloned()))
}

/// Maximal words avoiding every anchored embedding of `a`.
pub fn dual(a: &[FiniteWord], ap: &Alphabet, variant: DualVariant) -> Vec<FlatWord> {
    let a = normalize(a.iter().cloned());
    if a.iter().any(FiniteWord::is_empty) {
        return Vec::new();
    }
    let mut dp = DualPlus { ap, variant, letters: ap.letters(), memo: HashMap::new() };
    let mut out = BTreeSet::new();
    for sigma in ap.letters() {
        if a.iter().any(|w| w.len() == 1 && w[0].is_subset(sigma)) {
            continue;
        }
        let cont = normalize(a.iter().filter_map(|w| match (w[0].is_subset(sigma), variant) {
            (true, _) => Some(w.tail()),
            (false, DualVariant::Corrected) => None,
            (false, DualVariant::Paper) => Some(w.clone()),
        }));
        let head = FlatWord(vec![Segment::Letter(sigma)]);
        for v in dp.run(cont) {
            out.insert(head.concat(&v));
        }
    }
    out.into_iter().collect()
}
