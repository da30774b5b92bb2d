use std::collections::HashSet;

use crate::logic::alphabet::Alphabet;
use crate::logic::eval::holds;
use crate::logic::formula::{FragmentSignature, Formula, Op};

/// Formulas over `ops` and `ap` up to `max_size`, ordered by size, then by preorder tokens
/// with `⊤ < ⊥ < atoms < ¬ < X < F̂ < F < ∧ < ∨ < U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOrder {
    pub ap: Alphabet,
    pub ops: FragmentSignature,
    pub max_size: usize,
}

impl EnumerationOrder {
    pub fn new(ap: Alphabet, ops: FragmentSignature, max_size: usize) -> Self {
        EnumerationOrder { ap, ops, max_size }
    }
}

const UNARY: [Op; 4] = [Op::Not, Op::Next, Op::StrictEventually, Op::Eventually];
const BINARY: [Op; 3] = [Op::And, Op::Or, Op::Until];

fn build_unary(op: Op, c: Formula) -> Formula {
    match op {
        Op::Not => Formula::not(c),
        Op::Next => Formula::next(c),
        Op::StrictEventually => Formula::strict_eventually(c),
        _ => Formula::eventually(c),
    }
}

fn build_binary(op: Op, a: Formula, b: Formula) -> Formula {
    match op {
        Op::And => Formula::and(a, b),
        Op::Or => Formula::or(a, b),
        _ => Formula::until(a, b),
    }
}

fn leaves(order: &EnumerationOrder) -> Vec<Formula> {
    let mut v = Vec::new();
    if order.ops.contains(Op::True) {
        v.push(Formula::True);
    }
    if order.ops.contains(Op::False) {
        v.push(Formula::False);
    }
    v.extend((0..order.ap.len()).map(Formula::Atom));
    v
}

/// Formulas grouped by size; index 0 is empty.
pub fn formulas_by_size(order: &EnumerationOrder) -> Vec<Vec<Formula>> {
    let n_atoms = order.ap.len();
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new()];
    for size in 1..=order.max_size {
        let mut cur = if size == 1 { leaves(order) } else { Vec::new() };
        if size >= 2 {
            for op in UNARY.into_iter().filter(|&o| order.ops.contains(o)) {
                cur.extend(by_size[size - 1].iter().cloned().map(|c| build_unary(op, c)));
            }
        }
        for op in BINARY.into_iter().filter(|&o| order.ops.contains(o)) {
            for left in 1..size.saturating_sub(1) {
                let right = size - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        cur.push(build_binary(op, a.clone(), b.clone()));
                    }
                }
            }
        }
        cur.sort_by_cached_key(|f| f.order_key(n_atoms));
        by_size.push(cur);
    }
    by_size
}

pub fn enumerate_formulas(order: &EnumerationOrder) -> Vec<Formula> {
    formulas_by_size(order).into_iter().flatten().collect()
}

/// Keeps the first formula of each class of formulas agreeing on all words up to `max_len`.
pub fn dedup_semantic(formulas: Vec<Formula>, ap: &Alphabet, max_len: usize) -> Vec<Formula> {
    let words = ap.words_up_to(max_len);
    let mut seen = HashSet::new();
    formulas
        .into_iter()
        .filter(|f| seen.insert(words.iter().map(|w| holds(f, w)).collect::<Vec<bool>>()))
        .collect()
}

/// Position of `f` in the enumeration.
pub fn formula_index(order: &EnumerationOrder, f: &Formula) -> Option<usize> {
    enumerate_formulas(order).iter().position(|g| g == f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let ap = Alphabet::parse("p").unwrap();
        let order = EnumerationOrder::new(ap.clone(), FragmentSignature::of(&[Op::Next]), 2);
        let shown: Vec<String> = enumerate_formulas(&order).iter().map(|f| f.display(&ap).to_string()).collect();
        assert_eq!(shown, ["p", "X p"]);
        let order = EnumerationOrder::new(ap.clone(), FragmentSignature::of(&[Op::Next, Op::True]), 2);
        assert_eq!(enumerate_formulas(&order).len(), 4);
        assert_eq!(enumerate_formulas(&order)[0], Formula::True);
    }

    #[test]
    fn deterministic_and_sorted() {
        let ap = Alphabet::parse("p,q").unwrap();
        let order = EnumerationOrder::new(ap, FragmentSignature::parse("sF,&,|").unwrap(), 4);
        let a = enumerate_formulas(&order);
        assert_eq!(a, enumerate_formulas(&order));
        assert!(a.windows(2).all(|w| (w[0].size(), w[0].order_key(2)) < (w[1].size(), w[1].order_key(2))));
    }
}
