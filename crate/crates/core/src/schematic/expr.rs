use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, Cursor, FiniteWord, Letter};
use crate::words::WordExpr;

/// Boolean predicate over letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolExpr {
    True,
    False,
    Atom(usize),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn eval(&self, l: Letter) -> bool {
        match self {
            BoolExpr::True => true,
            BoolExpr::False => false,
            BoolExpr::Atom(a) => l.contains(*a),
            BoolExpr::Not(c) => !c.eval(l),
            BoolExpr::And(a, b) => a.eval(l) && b.eval(l),
            BoolExpr::Or(a, b) => a.eval(l) || b.eval(l),
        }
    }

    /// `∧_{p∈σ} p ∧ ∧_{q∉σ} ¬q`.
    pub fn exact(l: Letter, ap: &Alphabet) -> BoolExpr {
        (0..ap.len())
            .map(|i| if l.contains(i) { BoolExpr::Atom(i) } else { BoolExpr::Not(Box::new(BoolExpr::Atom(i))) })
            .reduce(|a, b| BoolExpr::And(Box::new(a), Box::new(b)))
            .unwrap_or(BoolExpr::True)
    }

    pub fn letters(&self, ap: &Alphabet) -> Vec<Letter> {
        ap.letters().into_iter().filter(|&l| self.eval(l)).collect()
    }

    fn level(&self) -> u8 {
        match self {
            BoolExpr::Or(..) => 1,
            BoolExpr::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_into(&self, ap: &Alphabet, min: u8, out: &mut String) {
        let paren = self.level() < min;
        if paren {
            out.push('(');
        }
        match self {
            BoolExpr::True => out.push_str("true"),
            BoolExpr::False => out.push_str("false"),
            BoolExpr::Atom(a) => out.push_str(ap.name(*a)),
            BoolExpr::Not(c) => {
                out.push('!');
                c.fmt_into(ap, 3, out);
            }
            BoolExpr::And(a, b) => {
                a.fmt_into(ap, 2, out);
                out.push('&');
                b.fmt_into(ap, 3, out);
            }
            BoolExpr::Or(a, b) => {
                a.fmt_into(ap, 1, out);
                out.push('|');
                b.fmt_into(ap, 2, out);
            }
        }
        if paren {
            out.push(')');
        }
    }

    pub fn display(&self, ap: &Alphabet) -> String {
        let mut s = String::new();
        self.fmt_into(ap, 0, &mut s);
        s
    }
}

/// Union-free regular expression over Boolean letter predicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchematicExpr {
    Sym(BoolExpr),
    Seq(Vec<SchematicExpr>),
    Star(Box<SchematicExpr>),
}

impl SchematicExpr {
    pub fn star_height(&self) -> usize {
        match self {
            SchematicExpr::Sym(_) => 0,
            SchematicExpr::Seq(items) => items.iter().map(Self::star_height).max().unwrap_or(0),
            SchematicExpr::Star(c) => 1 + c.star_height(),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.star_height() <= 1
    }

    pub fn is_star_free(&self) -> bool {
        self.star_height() == 0
    }

    fn syms(&self) -> Vec<&BoolExpr> {
        match self {
            SchematicExpr::Sym(b) => vec![b],
            SchematicExpr::Seq(items) => items.iter().flat_map(Self::syms).collect(),
            SchematicExpr::Star(c) => c.syms(),
        }
    }

    /// Every predicate denotes exactly one letter.
    pub fn is_exact_letter(&self, ap: &Alphabet) -> bool {
        self.syms().into_iter().all(|b| b.letters(ap).len() == 1)
    }

    pub fn starts_with_star(&self) -> bool {
        match self {
            SchematicExpr::Sym(_) => false,
            SchematicExpr::Seq(items) => items.first().is_some_and(Self::starts_with_star),
            SchematicExpr::Star(_) => true,
        }
    }

    /// The word obtained by taking every star zero times.
    pub fn min_instance(&self, ap: &Alphabet) -> Result<FiniteWord> {
        if !self.is_exact_letter(ap) {
            return Err(Error::Invalid("min_instance needs an exact-letter schema".into()));
        }
        let mut out = Vec::new();
        self.push_min(ap, &mut out);
        Ok(FiniteWord(out))
    }

    fn push_min(&self, ap: &Alphabet, out: &mut Vec<Letter>) {
        match self {
            SchematicExpr::Sym(b) => out.push(b.letters(ap)[0]),
            SchematicExpr::Seq(items) => items.iter().for_each(|i| i.push_min(ap, out)),
            SchematicExpr::Star(_) => {}
        }
    }

    fn language(&self, ap: &Alphabet, max_len: usize) -> BTreeSet<FiniteWord> {
        match self {
            SchematicExpr::Sym(b) if max_len >= 1 => {
                b.letters(ap).into_iter().map(|l| FiniteWord(vec![l])).collect()
            }
            SchematicExpr::Sym(_) => BTreeSet::new(),
            SchematicExpr::Seq(items) => items.iter().fold(BTreeSet::from([FiniteWord::empty()]), |acc, item| {
                concat_bounded(&acc, &item.language(ap, max_len), max_len)
            }),
            SchematicExpr::Star(c) => {
                let step = c.language(ap, max_len);
                let mut all = BTreeSet::from([FiniteWord::empty()]);
                let mut frontier = all.clone();
                while !frontier.is_empty() {
                    let next: BTreeSet<FiniteWord> =
                        concat_bounded(&frontier, &step, max_len).into_iter().filter(|w| !all.contains(w)).collect();
                    all.extend(next.iter().cloned());
                    frontier = next;
                }
                all
            }
        }
    }

    /// All nonempty members of `L(r)` of length at most `max_len`.
    pub fn instances(&self, ap: &Alphabet, max_len: usize) -> BTreeSet<FiniteWord> {
        let mut set = self.language(ap, max_len);
        set.remove(&FiniteWord::empty());
        set
    }

    /// Reads an exact-letter simple schema back as a word expression (stars become ω-powers).
    pub fn to_word_expr(&self, ap: &Alphabet) -> Option<WordExpr> {
        if !self.is_exact_letter(ap) || !self.is_simple() {
            return None;
        }
        self.to_expr_unchecked(ap)
    }

    fn to_expr_unchecked(&self, ap: &Alphabet) -> Option<WordExpr> {
        match self {
            SchematicExpr::Sym(b) => Some(WordExpr::Lit(b.letters(ap)[0])),
            SchematicExpr::Seq(items) => {
                WordExpr::concat_all(items.iter().map(|i| i.to_expr_unchecked(ap)).collect::<Option<Vec<_>>>()?)
            }
            SchematicExpr::Star(c) => Some(WordExpr::omega(c.to_expr_unchecked(ap)?)),
        }
    }

    fn fmt_into(&self, ap: &Alphabet, out: &mut String) {
        match self {
            SchematicExpr::Sym(b) => {
                out.push('[');
                out.push_str(&b.display(ap));
                out.push(']');
            }
            SchematicExpr::Seq(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push('.');
                    }
                    if matches!(item, SchematicExpr::Seq(_)) {
                        out.push('(');
                        item.fmt_into(ap, out);
                        out.push(')');
                    } else {
                        item.fmt_into(ap, out);
                    }
                }
            }
            SchematicExpr::Star(c) => {
                if matches!(c.as_ref(), SchematicExpr::Sym(_)) {
                    c.fmt_into(ap, out);
                } else {
                    out.push('(');
                    c.fmt_into(ap, out);
                    out.push(')');
                }
                out.push('*');
            }
        }
    }

    /// Prints e.g. `[p&!q]*.([p&!q&r].[!p&q&r])*`.
    pub fn display(&self, ap: &Alphabet) -> String {
        let mut s = String::new();
        self.fmt_into(ap, &mut s);
        s
    }

    pub fn parse(text: &str, ap: &Alphabet) -> Result<SchematicExpr> {
        let mut cur = Cursor::new(text);
        let r = parse_seq(&mut cur, ap)?;
        cur.expect_end()?;
        Ok(r)
    }
}

fn concat_bounded(a: &BTreeSet<FiniteWord>, b: &BTreeSet<FiniteWord>, max_len: usize) -> BTreeSet<FiniteWord> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            if x.len() + y.len() <= max_len {
                out.insert(x.concat(y));
            }
        }
    }
    out
}

fn parse_seq(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<SchematicExpr> {
    let mut items = vec![parse_item(cur, ap)?];
    while cur.eat('.') {
        items.push(parse_item(cur, ap)?);
    }
    Ok(if items.len() == 1 { items.pop().expect("one item") } else { SchematicExpr::Seq(items) })
}

fn parse_item(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<SchematicExpr> {
    cur.skip_ws();
    let mut r = match cur.peek() {
        Some('[') => {
            cur.bump();
            let b = parse_or(cur, ap)?;
            cur.expect(']')?;
            SchematicExpr::Sym(b)
        }
        Some('(') => {
            cur.bump();
            let inner = parse_seq(cur, ap)?;
            cur.expect(')')?;
            inner
        }
        _ => return cur.err("`[` or `(`"),
    };
    while cur.eat('*') {
        r = SchematicExpr::Star(Box::new(r));
    }
    Ok(r)
}

fn parse_or(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<BoolExpr> {
    let mut b = parse_and(cur, ap)?;
    while cur.eat('|') {
        b = BoolExpr::Or(Box::new(b), Box::new(parse_and(cur, ap)?));
    }
    Ok(b)
}

fn parse_and(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<BoolExpr> {
    let mut b = parse_unary(cur, ap)?;
    while cur.eat('&') {
        b = BoolExpr::And(Box::new(b), Box::new(parse_unary(cur, ap)?));
    }
    Ok(b)
}

fn parse_unary(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<BoolExpr> {
    if cur.eat('!') {
        return Ok(BoolExpr::Not(Box::new(parse_unary(cur, ap)?)));
    }
    if cur.eat('(') {
        let b = parse_or(cur, ap)?;
        cur.expect(')')?;
        return Ok(b);
    }
    match cur.ident() {
        Some("true") => Ok(BoolExpr::True),
        Some("false") => Ok(BoolExpr::False),
        Some(name) => Ok(BoolExpr::Atom(ap.atom(name)?)),
        None => cur.err("atom, `true`, `false`, `!` or `(`"),
    }
}

/// Replaces each letter by its exact predicate, concatenation by sequence and ω by Kleene star.
pub fn translate_schematic(e: &WordExpr, ap: &Alphabet) -> Result<SchematicExpr> {
    if !e.is_flat() {
        return Err(Error::NonFlat);
    }
    Ok(translate(e, ap))
}

fn translate(e: &WordExpr, ap: &Alphabet) -> SchematicExpr {
    match e {
        WordExpr::Lit(l) => SchematicExpr::Sym(BoolExpr::exact(*l, ap)),
        WordExpr::Concat(..) => {
            let mut items = Vec::new();
            flatten_concat(e, &mut items);
            SchematicExpr::Seq(items.into_iter().map(|x| translate(x, ap)).collect())
        }
        WordExpr::Omega(c) => SchematicExpr::Star(Box::new(translate(c, ap))),
    }
}

fn flatten_concat<'a>(e: &'a WordExpr, out: &mut Vec<&'a WordExpr>) {
    match e {
        WordExpr::Concat(a, b) => {
            flatten_concat(a, out);
            flatten_concat(b, out);
        }
        _ => out.push(e),
    }
}
