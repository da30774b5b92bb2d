use crate::error::{Error, Result};
use crate::logic::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteTarget {
    /// `F̂, ∧, ∨, ⊤, ⊥`
    StrictEventually,
    /// `Ĝ, ∧, ∨, ⊤, ⊥`
    StrictGlobally,
}

impl RewriteTarget {
    fn name(self) -> &'static str {
        match self {
            RewriteTarget::StrictEventually => "F̂,∧,∨,⊤,⊥",
            RewriteTarget::StrictGlobally => "Ĝ,∧,∨,⊤,⊥",
        }
    }
}

fn outside(target: RewriteTarget, node: &Formula) -> Error {
    Error::Fragment { fragment: target.name().into(), node: format!("{node:?}") }
}

fn strict_globally_child(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(inner) => match inner.as_ref() {
            Formula::StrictEventually(c) => match c.as_ref() {
                Formula::Not(x) => Some(x),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

fn globally_child(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Eventually(c) => match c.as_ref() {
                Formula::Not(x) => Some(x),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

/// Rewrites `F φ` as `φ ∨ F̂ φ` (or `G φ` as `φ ∧ Ĝ φ`) and checks the result lies in the target fragment.
pub fn rewrite_for_fragment(f: &Formula, target: RewriteTarget) -> Result<Formula> {
    let rec = |c: &Formula| rewrite_for_fragment(c, target);
    Ok(match f {
        Formula::True | Formula::False | Formula::Atom(_) => f.clone(),
        Formula::And(a, b) => Formula::and(rec(a)?, rec(b)?),
        Formula::Or(a, b) => Formula::or(rec(a)?, rec(b)?),
        _ => match target {
            RewriteTarget::StrictEventually => match f {
                Formula::StrictEventually(c) => Formula::strict_eventually(rec(c)?),
                Formula::Eventually(c) => {
                    let c = rec(c)?;
                    Formula::or(c.clone(), Formula::strict_eventually(c))
                }
                _ => return Err(outside(target, f)),
            },
            RewriteTarget::StrictGlobally => {
                if let Some(c) = strict_globally_child(f) {
                    Formula::strict_globally(rec(c)?)
                } else if let Some(c) = globally_child(f) {
                    let c = rec(c)?;
                    Formula::and(c.clone(), Formula::strict_globally(c))
                } else {
                    return Err(outside(target, f));
                }
            }
        },
    })
}

pub fn in_strict_eventually_fragment(f: &Formula) -> bool {
    match f {
        Formula::True | Formula::False | Formula::Atom(_) => true,
        Formula::And(a, b) | Formula::Or(a, b) => in_strict_eventually_fragment(a) && in_strict_eventually_fragment(b),
        Formula::StrictEventually(c) => in_strict_eventually_fragment(c),
        _ => false,
    }
}

pub fn in_strict_globally_fragment(f: &Formula) -> bool {
    match f {
        Formula::True | Formula::False | Formula::Atom(_) => true,
        Formula::And(a, b) | Formula::Or(a, b) => in_strict_globally_fragment(a) && in_strict_globally_fragment(b),
        _ => strict_globally_child(f).is_some_and(in_strict_globally_fragment),
    }
}

/// Swaps `∧↔∨`, `⊤↔⊥`, `Ĝ↔F̂` with atoms fixed. Accepts either pure fragment and is an involution.
pub fn dualize(f: &Formula) -> Result<Formula> {
    if !in_strict_globally_fragment(f) && !in_strict_eventually_fragment(f) {
        return Err(outside(RewriteTarget::StrictGlobally, f));
    }
    Ok(swap(f))
}

fn swap(f: &Formula) -> Formula {
    match f {
        Formula::True => Formula::False,
        Formula::False => Formula::True,
        Formula::Atom(_) => f.clone(),
        Formula::And(a, b) => Formula::or(swap(a), swap(b)),
        Formula::Or(a, b) => Formula::and(swap(a), swap(b)),
        Formula::StrictEventually(c) => Formula::strict_globally(swap(c)),
        _ => Formula::strict_eventually(swap(strict_globally_child(f).expect("checked fragment"))),
    }
}
