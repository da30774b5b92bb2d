use std::fmt;

use crate::error::{Error, Result};
use crate::logic::formula::{FragmentSignature, Op};

use Op::{And, Eventually as F, False as Bot, Next as X, Not, Or, StrictEventually as SF, True as Top, Until as U};

/// The six maximal operator sets whose fragments admit finite characterizations over finite words.
pub fn maximal_positive_sets() -> [FragmentSignature; 6] {
    [
        FragmentSignature::of(&[SF, X, And, Top]),
        FragmentSignature::of(&[F, Or, Top, Bot]),
        FragmentSignature::of(&[F, Not, Top, Bot]),
        FragmentSignature::of(&[F, SF, X, Top]),
        FragmentSignature::of(&[X, Not]),
        FragmentSignature::of(&[SF, Not]),
    ]
}

/// Minimal operator sets whose fragments do not admit finite characterizations.
pub fn negative_fragments() -> Vec<FragmentSignature> {
    [
        &[F, And][..],
        &[X, Or],
        &[SF, Or],
        &[X, Bot],
        &[SF, Bot],
        &[X, And, Not],
        &[F, And, Not],
        &[SF, And, Not],
        &[U],
        &[SF, X, Not],
        &[F, SF, Not],
    ]
    .into_iter()
    .map(FragmentSignature::of)
    .collect()
}

/// Adds operators definable from the given ones (`F̂ = XF`, De Morgan, `⊥ = ¬⊤`).
pub fn definability_closure(ops: FragmentSignature) -> FragmentSignature {
    let rules: [(&[Op], Op); 5] =
        [(&[X, F], SF), (&[Not, Or], And), (&[Not, And], Or), (&[Not, Top], Bot), (&[Not, Bot], Top)];
    let mut cur = ops;
    loop {
        let next = rules.iter().fold(cur, |s, (need, add)| {
            if FragmentSignature::of(need).is_subset(s) {
                s.with(*add)
            } else {
                s
            }
        });
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassWitness {
    /// One-based index into [`maximal_positive_sets`] and the set itself.
    MaximalSet(usize, FragmentSignature),
    ViolatedFragment(FragmentSignature),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub admits: bool,
    pub witness: ClassWitness,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            ClassWitness::MaximalSet(i, s) => write!(f, "admits; maximal set {i} {s}"),
            ClassWitness::ViolatedFragment(s) => write!(f, "does not admit; violated fragment {s}"),
        }
    }
}

pub fn classify_operator_set(ops: FragmentSignature) -> Result<Classification> {
    if !ops.has_temporal() {
        return Err(Error::Classification(format!("{ops} contains no temporal operator")));
    }
    if let Some((i, s)) = maximal_positive_sets().into_iter().enumerate().find(|(_, s)| ops.is_subset(*s)) {
        return Ok(Classification { admits: true, witness: ClassWitness::MaximalSet(i + 1, s) });
    }
    let closed = definability_closure(ops);
    negative_fragments()
        .into_iter()
        .find(|n| n.is_subset(closed))
        .map(|n| Classification { admits: false, witness: ClassWitness::ViolatedFragment(n) })
        .ok_or_else(|| Error::Classification(format!("no maximal set or negative fragment covers {ops}")))
}
