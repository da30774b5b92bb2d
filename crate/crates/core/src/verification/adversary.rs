use std::fmt;
use std::str::FromStr;

use crate::characterization::sample::{Payload, Sample};
use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord, Letter};
use crate::logic::equiv::{equivalent_bounded, Equivalence};
use crate::logic::eval::holds;
use crate::logic::formula::Formula;
use crate::verification::fit::{CompiledFormula, FitOptions};
use crate::words::{FlatWord, Segment, WordExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `F(p∧q∧F(r∧F(p∧q)))` against the alternation formulas `φ_k` over ω-words.
    FAndOmega,
    /// `p` against `p ∨ X^n p`.
    XOr,
    /// `(p U q) U r` against `ψ_n`.
    Until,
    /// `p` against `p ∨ φ` built from the negative examples.
    XAndNot,
    /// `F(p∧q)` against `φ ∨ (p ∧ Xp ∧ … ∧ X^n p ∧ X^{n+1} q)`.
    FxAndOr,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::FAndOmega, Family::XOr, Family::Until, Family::XAndNot, Family::FxAndOr];

    pub fn name(self) -> &'static str {
        match self {
            Family::FAndOmega => "f-and-omega",
            Family::XOr => "x-or",
            Family::Until => "u",
            Family::XAndNot => "x-and-not",
            Family::FxAndOr => "fx-and-or",
        }
    }

    /// The family's designated target over `ap`.
    pub fn target(self, ap: &Alphabet) -> Result<Formula> {
        let p = Formula::Atom(ap.atom("p")?);
        Ok(match self {
            Family::XOr | Family::XAndNot => p,
            Family::FAndOmega => {
                let (q, r) = (Formula::Atom(ap.atom("q")?), Formula::Atom(ap.atom("r")?));
                let pq = Formula::and(p, q);
                Formula::eventually(Formula::and(pq.clone(), Formula::eventually(Formula::and(r, Formula::eventually(pq)))))
            }
            Family::Until => {
                let (q, r) = (Formula::Atom(ap.atom("q")?), Formula::Atom(ap.atom("r")?));
                Formula::until(Formula::until(p, q), r)
            }
            Family::FxAndOr => Formula::eventually(Formula::and(p, Formula::Atom(ap.atom("q")?))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown adversary family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdversaryOutput {
    pub family: Family,
    pub psi: Formula,
    /// The proof's `n`, `k` or `ℓ_max + 1`.
    pub parameter: usize,
    pub witness: Payload,
    /// Value of the target on the witness; `ψ` takes the opposite value.
    pub target_value: bool,
}

/// `F(a₁ ∧ F(a₂ ∧ … F(a_k ∧ F(r ∧ F(p∧q)))))` with `a_i` alternating `p, q`.
pub fn alternation_formula(k: usize, ap: &Alphabet) -> Result<Formula> {
    let (p, q, r) = (ap.atom("p")?, ap.atom("q")?, ap.atom("r")?);
    let tail = Formula::and(Formula::Atom(p), Formula::Atom(q));
    let mut inner = Formula::and(Formula::Atom(r), Formula::eventually(tail));
    for i in (1..=k).rev() {
        let a = if i % 2 == 1 { p } else { q };
        inner = Formula::and(Formula::Atom(a), Formula::eventually(inner));
    }
    Ok(Formula::eventually(inner))
}

/// `ψ₀ = r`, `ψ_{n+1} = p U (q U ψ_n)`.
pub fn until_bound_formula(n: usize, ap: &Alphabet) -> Result<Formula> {
    let (p, q, r) = (ap.atom("p")?, ap.atom("q")?, ap.atom("r")?);
    let mut f = Formula::Atom(r);
    for _ in 0..n {
        f = Formula::until(Formula::Atom(p), Formula::until(Formula::Atom(q), f));
    }
    Ok(f)
}

fn finite_words(s: &Sample, family: Family) -> Result<Vec<(&FiniteWord, bool)>> {
    s.examples()
        .iter()
        .map(|ex| match &ex.payload {
            Payload::Word(w) => Ok((w, ex.label.is_positive())),
            other => Err(Error::Adversary(format!("family {family} accepts finite words only, got a {}", other.kind()))),
        })
        .collect()
}

/// The least `ℓ` such that `w[ℓ..]` lacks every letter containing `p,q` or every letter containing `r`.
fn suffix_bound(w: &FlatWord, ap: &Alphabet) -> Result<usize> {
    let (p, q, r) = (ap.atom("p")?, ap.atom("q")?, ap.atom("r")?);
    let pq = Letter::singleton(p).union(Letter::singleton(q));
    let rl = Letter::singleton(r);
    let mut prefix = Vec::new();
    let mut period: Option<&[Letter]> = None;
    for (i, seg) in w.segments().iter().enumerate() {
        match seg {
            Segment::Letter(l) => prefix.push(*l),
            Segment::Omega(block) if i + 1 == w.segments().len() => period = Some(block),
            Segment::Omega(_) => {
                return Err(Error::Adversary("negative examples must have length at most ω".into()));
            }
        }
    }
    let option = |class: Letter| -> Option<usize> {
        if period.is_some_and(|b| b.iter().any(|l| class.is_subset(*l))) {
            return None;
        }
        Some(prefix.iter().rposition(|l| class.is_subset(*l)).map_or(0, |i| i + 1))
    };
    option(pq)
        .into_iter()
        .chain(option(rl))
        .min()
        .ok_or_else(|| Error::Adversary("negative example satisfies the target".into()))
}

fn check_fit(psi: &Formula, s: &Sample) -> Result<()> {
    let report = CompiledFormula::new(psi, &s.ap).fits(s, &FitOptions::default())?;
    match report.first_failure {
        None => Ok(()),
        Some(i) => Err(Error::Adversary(format!(
            "construction defeated: {} does not fit example {} ({})",
            psi.display(&s.ap),
            i + 1,
            s.examples()[i].payload.display(&s.ap)
        ))),
    }
}

fn shortest_witness(target: &Formula, psi: &Formula, ap: &Alphabet, max_len: usize) -> Result<FiniteWord> {
    match equivalent_bounded(target, psi, ap, max_len) {
        Equivalence::Distinguished(w) => Ok(w),
        _ => Err(Error::Adversary("no distinguishing word within the search bound".into())),
    }
}

/// Realizes the impossibility proof of `family` on the sample: returns `ψ` fitting `s`, inequivalent to `target`,
/// with a checked distinguishing witness.
pub fn adversary(family: Family, s: &Sample, target: &Formula) -> Result<AdversaryOutput> {
    let ap = &s.ap;
    if *target != family.target(ap)? {
        return Err(Error::Adversary(format!(
            "family {family} expects target {}",
            family.target(ap)?.display(ap)
        )));
    }
    if let Some(i) = CompiledFormula::new(target, ap).fits(s, &FitOptions::default())?.first_failure {
        return Err(Error::TargetDoesNotFit { index: i });
    }
    let p = ap.atom("p")?;
    let out = match family {
        Family::FAndOmega => {
            let mut l_max = 0;
            for ex in s.examples() {
                let flat = match &ex.payload {
                    Payload::Word(w) => FlatWord::from(w),
                    Payload::Expr(e) => e.to_flat()?,
                    Payload::Schema(_) => return Err(Error::Adversary("schemas are outside the proof domain".into())),
                };
                if !ex.label.is_positive() {
                    l_max = l_max.max(suffix_bound(&flat, ap)?);
                }
            }
            let k = l_max + 1;
            let psi = alternation_formula(k, ap)?;
            let (q, r) = (ap.atom("q")?, ap.atom("r")?);
            let mut parts: Vec<WordExpr> =
                (1..=k).map(|i| WordExpr::Lit(Letter::singleton(if i % 2 == 1 { p } else { q }))).collect();
            parts.push(WordExpr::Lit(Letter::singleton(r)));
            parts.push(WordExpr::Lit(Letter::singleton(p).union(Letter::singleton(q))));
            parts.push(WordExpr::omega(WordExpr::Lit(Letter::EMPTY)));
            let witness = WordExpr::concat_all(parts).expect("nonempty");
            AdversaryOutput { family, psi, parameter: k, witness: Payload::Expr(witness), target_value: false }
        }
        Family::XOr => {
            let words = finite_words(s, family)?;
            let n = words.iter().filter(|(_, b)| !b).map(|(w, _)| w.len()).max().unwrap_or(0) + 1;
            let psi = Formula::or(Formula::Atom(p), Formula::next_n(n, Formula::Atom(p)));
            let w = shortest_witness(target, &psi, ap, n + 1)?;
            AdversaryOutput { family, psi, parameter: n, target_value: holds(target, &w), witness: Payload::Word(w) }
        }
        Family::Until => {
            let words = finite_words(s, family)?;
            let mut m = 0;
            for (w, _) in words.iter().filter(|(_, b)| *b) {
                let need = (0..=w.len())
                    .find(|&n| until_bound_formula(n, ap).is_ok_and(|f| holds(&f, w)))
                    .ok_or_else(|| Error::Adversary("positive example has no bounded alternation witness".into()))?;
                m = m.max(need);
            }
            let n = m + 1;
            let psi = until_bound_formula(n, ap)?;
            let (q, r) = (ap.atom("q")?, ap.atom("r")?);
            let mut letters = Vec::new();
            for _ in 0..=n {
                letters.push(Letter::singleton(p));
                letters.push(Letter::singleton(q));
            }
            letters.push(Letter::singleton(r));
            let w = FiniteWord::new(letters);
            AdversaryOutput { family, psi, parameter: n, target_value: holds(target, &w), witness: Payload::Word(w) }
        }
        Family::XAndNot => {
            let words = finite_words(s, family)?;
            let negatives: Vec<&FiniteWord> = words.iter().filter(|(_, b)| !b).map(|(w, _)| *w).collect();
            let k = negatives.len();
            let mut conjuncts = Vec::new();
            let mut letters = vec![Letter::EMPTY; k + 2];
            for (idx, w) in negatives.iter().enumerate() {
                let i = idx + 1;
                let has_p = i + 1 < w.len() && w[i + 1].contains(p);
                let lit = if has_p { Formula::not(Formula::Atom(p)) } else { Formula::Atom(p) };
                conjuncts.push(Formula::next_n(i + 1, lit));
                letters[i + 1] = if i + 1 < w.len() { ap.complement(w[i + 1]) } else { ap.full() };
            }
            let psi = match Formula::and_all(conjuncts) {
                Some(phi) => Formula::or(Formula::Atom(p), phi),
                None => Formula::or(Formula::Atom(p), Formula::True),
            };
            let w = FiniteWord::new(letters);
            AdversaryOutput { family, psi, parameter: k, target_value: holds(target, &w), witness: Payload::Word(w) }
        }
        Family::FxAndOr => {
            let words = finite_words(s, family)?;
            let q = ap.atom("q")?;
            let disjunct = |n: usize| {
                let mut parts: Vec<Formula> = (0..=n).map(|i| Formula::next_n(i, Formula::Atom(p))).collect();
                parts.push(Formula::next_n(n + 1, Formula::Atom(q)));
                Formula::and_all(parts).expect("nonempty")
            };
            let n = (1..)
                .find(|&n| {
                    let d = disjunct(n);
                    words.iter().filter(|(_, b)| !b).all(|(w, _)| !holds(&d, w))
                })
                .expect("each negative blocks at most one n");
            let psi = Formula::or(target.clone(), disjunct(n));
            let mut letters = vec![Letter::singleton(p); n + 1];
            letters.push(Letter::singleton(q));
            let w = FiniteWord::new(letters);
            AdversaryOutput { family, psi, parameter: n, target_value: holds(target, &w), witness: Payload::Word(w) }
        }
    };
    check_fit(&out.psi, s)?;
    check_witness(&out, target, ap)?;
    Ok(out)
}

fn check_witness(out: &AdversaryOutput, target: &Formula, ap: &Alphabet) -> Result<()> {
    let value = |f: &Formula| -> Result<bool> {
        let c = CompiledFormula::new(f, ap);
        match &out.witness {
            Payload::Word(w) => c.eval_word(w),
            Payload::Expr(e) => c.eval_expr(e),
            Payload::Schema(_) => unreachable!("witnesses are words or expressions"),
        }
    };
    let (t, v) = (value(target)?, value(&out.psi)?);
    if t != out.target_value || t == v {
        return Err(Error::Adversary(format!("witness {} does not distinguish", out.witness.display(ap))));
    }
    Ok(())
}
