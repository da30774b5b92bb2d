use std::fmt;

use crate::error::{Error, Result};
use crate::logic::alphabet::Alphabet;

/// LTL syntax tree. Derived operators (G, strict G) are expanded by the parser.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Atom(usize),
    Not(Box<Formula>),
    Next(Box<Formula>),
    Eventually(Box<Formula>),
    StrictEventually(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
}

/// Operator tags of the nine-element universe, in display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Until,
    Eventually,
    StrictEventually,
    Next,
    And,
    Or,
    Not,
    True,
    False,
}

impl Op {
    pub const ALL: [Op; 9] = [
        Op::Until,
        Op::Eventually,
        Op::StrictEventually,
        Op::Next,
        Op::And,
        Op::Or,
        Op::Not,
        Op::True,
        Op::False,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Until => "U",
            Op::Eventually => "F",
            Op::StrictEventually => "F̂",
            Op::Next => "X",
            Op::And => "∧",
            Op::Or => "∨",
            Op::Not => "¬",
            Op::True => "⊤",
            Op::False => "⊥",
        }
    }

    pub fn is_temporal(self) -> bool {
        matches!(self, Op::Until | Op::Eventually | Op::StrictEventually | Op::Next)
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }

    pub fn parse(token: &str) -> Option<Op> {
        Some(match token {
            "U" => Op::Until,
            "F" => Op::Eventually,
            "sF" | "F̂" | "Fhat" => Op::StrictEventually,
            "X" => Op::Next,
            "&" | "∧" | "and" => Op::And,
            "|" | "∨" | "or" => Op::Or,
            "!" | "¬" | "not" => Op::Not,
            "true" | "⊤" => Op::True,
            "false" | "⊥" => Op::False,
            _ => return None,
        })
    }
}

/// A subset of the operator universe.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FragmentSignature(u16);

impl FragmentSignature {
    pub fn empty() -> Self {
        FragmentSignature(0)
    }

    pub fn from_bits(bits: u16) -> Self {
        FragmentSignature(bits & 0x1ff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn of(ops: &[Op]) -> Self {
        ops.iter().fold(Self::empty(), |s, &o| s.with(o))
    }

    pub fn with(self, op: Op) -> Self {
        FragmentSignature(self.0 | op.bit())
    }

    pub fn contains(self, op: Op) -> bool {
        self.0 & op.bit() != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        FragmentSignature(self.0 | other.0)
    }

    pub fn ops(self) -> impl Iterator<Item = Op> {
        Op::ALL.into_iter().filter(move |&o| self.contains(o))
    }

    pub fn has_temporal(self) -> bool {
        self.ops().any(Op::is_temporal)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Parses a comma-separated list such as `F,&` or `sF,X,&,true`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sig = Self::empty();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let op = Op::parse(tok).ok_or_else(|| Error::Invalid(format!("unknown operator `{tok}`")))?;
            sig = sig.with(op);
        }
        Ok(sig)
    }

    /// The fragment `F, F̂, ∧, ∨, ⊤, ⊥`.
    pub fn monotone() -> Self {
        Self::of(&[Op::Eventually, Op::StrictEventually, Op::And, Op::Or, Op::True, Op::False])
    }
}

impl fmt::Display for FragmentSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<&str> = self.ops().map(Op::symbol).collect();
        write!(f, "{{{}}}", syms.join(","))
    }
}

impl Formula {
    pub fn atom(i: usize) -> Self {
        Formula::Atom(i)
    }
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }
    pub fn next(f: Formula) -> Self {
        Formula::Next(Box::new(f))
    }
    pub fn eventually(f: Formula) -> Self {
        Formula::Eventually(Box::new(f))
    }
    pub fn strict_eventually(f: Formula) -> Self {
        Formula::StrictEventually(Box::new(f))
    }
    pub fn globally(f: Formula) -> Self {
        Formula::not(Formula::eventually(Formula::not(f)))
    }
    pub fn strict_globally(f: Formula) -> Self {
        Formula::not(Formula::strict_eventually(Formula::not(f)))
    }
    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn until(a: Formula, b: Formula) -> Self {
        Formula::Until(Box::new(a), Box::new(b))
    }

    /// `X^n f`.
    pub fn next_n(n: usize, f: Formula) -> Self {
        (0..n).fold(f, |acc, _| Formula::next(acc))
    }

    /// Left-nested conjunction; `None` for an empty list.
    pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::and)
    }

    pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::or)
    }

    pub fn op(&self) -> Option<Op> {
        Some(match self {
            Formula::Atom(_) => return None,
            Formula::True => Op::True,
            Formula::False => Op::False,
            Formula::Not(_) => Op::Not,
            Formula::Next(_) => Op::Next,
            Formula::Eventually(_) => Op::Eventually,
            Formula::StrictEventually(_) => Op::StrictEventually,
            Formula::And(..) => Op::And,
            Formula::Or(..) => Op::Or,
            Formula::Until(..) => Op::Until,
        })
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => vec![],
            Formula::Not(c) | Formula::Next(c) | Formula::Eventually(c) | Formula::StrictEventually(c) => {
                vec![c]
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Until(a, b) => vec![a, b],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    pub fn signature(&self) -> FragmentSignature {
        let own = self.op().map_or(FragmentSignature::empty(), |o| FragmentSignature::empty().with(o));
        self.children().into_iter().fold(own, |s, c| s.union(c.signature()))
    }

    /// Maximal nesting of temporal operators.
    pub fn temporal_depth(&self) -> usize {
        let inner = self.children().into_iter().map(Formula::temporal_depth).max().unwrap_or(0);
        inner + usize::from(self.op().is_some_and(Op::is_temporal))
    }

    /// Maximal nesting of `X`.
    pub fn next_depth(&self) -> usize {
        let inner = self.children().into_iter().map(Formula::next_depth).max().unwrap_or(0);
        inner + usize::from(matches!(self, Formula::Next(_)))
    }

    pub fn display<'a>(&'a self, ap: &'a Alphabet) -> FormulaDisplay<'a> {
        FormulaDisplay { formula: self, ap }
    }

    /// Preorder token ranks: ⊤ < ⊥ < atoms < ¬ < X < F̂ < F < ∧ < ∨ < U.
    pub fn order_key(&self, n_atoms: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.push_key(n_atoms, &mut out);
        out
    }

    fn push_key(&self, n: usize, out: &mut Vec<usize>) {
        out.push(match self {
            Formula::True => 0,
            Formula::False => 1,
            Formula::Atom(i) => 2 + i,
            Formula::Not(_) => 2 + n,
            Formula::Next(_) => 3 + n,
            Formula::StrictEventually(_) => 4 + n,
            Formula::Eventually(_) => 5 + n,
            Formula::And(..) => 6 + n,
            Formula::Or(..) => 7 + n,
            Formula::Until(..) => 8 + n,
        });
        for c in self.children() {
            c.push_key(n, out);
        }
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    ap: &'a Alphabet,
}

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Until(..) => 3,
        _ => 4,
    }
}

fn write_formula(f: &Formula, ap: &Alphabet, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let paren = level(f) < min;
    if paren {
        write!(out, "(")?;
    }
    match f {
        Formula::True => write!(out, "true")?,
        Formula::False => write!(out, "false")?,
        Formula::Atom(i) => write!(out, "{}", ap.name(*i))?,
        Formula::Not(c) => {
            write!(out, "!")?;
            write_formula(c, ap, 4, out)?;
        }
        Formula::Next(c) | Formula::Eventually(c) | Formula::StrictEventually(c) => {
            let kw = match f {
                Formula::Next(_) => "X",
                Formula::Eventually(_) => "F",
                _ => "sF",
            };
            write!(out, "{kw} ")?;
            write_formula(c, ap, 4, out)?;
        }
        Formula::Or(a, b) => {
            write_formula(a, ap, 1, out)?;
            write!(out, " | ")?;
            write_formula(b, ap, 2, out)?;
        }
        Formula::And(a, b) => {
            write_formula(a, ap, 2, out)?;
            write!(out, " & ")?;
            write_formula(b, ap, 3, out)?;
        }
        Formula::Until(a, b) => {
            write_formula(a, ap, 4, out)?;
            write!(out, " U ")?;
            write_formula(b, ap, 4, out)?;
        }
    }
    if paren {
        write!(out, ")")?;
    }
    Ok(())
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self.formula, self.ap, 0, f)
    }
}
