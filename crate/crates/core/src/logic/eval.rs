use crate::error::{Error, Result};
use crate::logic::alphabet::FiniteWord;
use crate::logic::formula::Formula;

/// Truth value of `f` at every position of `w`.
pub fn truth_table(f: &Formula, w: &FiniteWord) -> Vec<bool> {
    let n = w.len();
    match f {
        Formula::True => vec![true; n],
        Formula::False => vec![false; n],
        Formula::Atom(a) => w.letters().iter().map(|l| l.contains(*a)).collect(),
        Formula::Not(c) => truth_table(c, w).into_iter().map(|b| !b).collect(),
        Formula::And(a, b) => {
            let (x, y) = (truth_table(a, w), truth_table(b, w));
            x.iter().zip(&y).map(|(p, q)| *p && *q).collect()
        }
        Formula::Or(a, b) => {
            let (x, y) = (truth_table(a, w), truth_table(b, w));
            x.iter().zip(&y).map(|(p, q)| *p || *q).collect()
        }
        Formula::Next(c) => {
            let x = truth_table(c, w);
            (0..n).map(|i| i + 1 < n && x[i + 1]).collect()
        }
        Formula::Eventually(c) => {
            let mut x = truth_table(c, w);
            for i in (0..n.saturating_sub(1)).rev() {
                x[i] = x[i] || x[i + 1];
            }
            x
        }
        Formula::StrictEventually(c) => {
            let x = truth_table(c, w);
            let mut out = vec![false; n];
            for i in (0..n.saturating_sub(1)).rev() {
                out[i] = x[i + 1] || out[i + 1];
            }
            out
        }
        Formula::Until(a, b) => {
            let (x, y) = (truth_table(a, w), truth_table(b, w));
            let mut out = vec![false; n];
            for i in (0..n).rev() {
                out[i] = y[i] || (x[i] && i + 1 < n && out[i + 1]);
            }
            out
        }
    }
}

/// `w ⊨ f` over a finite nonempty word.
pub fn eval_finite(f: &Formula, w: &FiniteWord) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(holds(f, w))
}

/// Like [`eval_finite`] for callers that guarantee a nonempty word.
pub(crate) fn holds(f: &Formula, w: &FiniteWord) -> bool {
    debug_assert!(!w.is_empty());
    truth_table(f, w)[0]
}
