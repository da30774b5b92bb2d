use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, Cursor, FiniteWord, Letter};
use crate::words::ordinal::Ordinal;

/// A finitely presented transfinite word: letters, concatenation and ω-power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordExpr {
    Lit(Letter),
    Concat(Box<WordExpr>, Box<WordExpr>),
    Omega(Box<WordExpr>),
}

impl WordExpr {
    pub fn lit(l: Letter) -> Self {
        WordExpr::Lit(l)
    }

    pub fn omega(e: WordExpr) -> Self {
        WordExpr::Omega(Box::new(e))
    }

    /// Right-nested concatenation; `None` for an empty list.
    pub fn concat_all(parts: Vec<WordExpr>) -> Option<WordExpr> {
        parts.into_iter().rev().reduce(|acc, e| WordExpr::Concat(Box::new(e), Box::new(acc)))
    }

    pub fn from_word(w: &FiniteWord) -> Option<WordExpr> {
        WordExpr::concat_all(w.letters().iter().map(|&l| WordExpr::Lit(l)).collect())
    }

    pub fn size(&self) -> usize {
        match self {
            WordExpr::Lit(_) => 1,
            WordExpr::Concat(a, b) => 1 + a.size() + b.size(),
            WordExpr::Omega(c) => 1 + c.size(),
        }
    }

    pub fn has_omega(&self) -> bool {
        match self {
            WordExpr::Lit(_) => false,
            WordExpr::Concat(a, b) => a.has_omega() || b.has_omega(),
            WordExpr::Omega(_) => true,
        }
    }

    pub fn is_flat(&self) -> bool {
        match self {
            WordExpr::Lit(_) => true,
            WordExpr::Concat(a, b) => a.is_flat() && b.is_flat(),
            WordExpr::Omega(c) => !c.has_omega(),
        }
    }

    pub fn to_flat(&self) -> Result<FlatWord> {
        let mut segs = Vec::new();
        self.push_segments(&mut segs)?;
        Ok(FlatWord(segs))
    }

    fn push_segments(&self, out: &mut Vec<Segment>) -> Result<()> {
        match self {
            WordExpr::Lit(l) => out.push(Segment::Letter(*l)),
            WordExpr::Concat(a, b) => {
                a.push_segments(out)?;
                b.push_segments(out)?;
            }
            WordExpr::Omega(c) => {
                let mut inner = Vec::new();
                c.push_segments(&mut inner)?;
                let period = inner
                    .into_iter()
                    .map(|s| match s {
                        Segment::Letter(l) => Ok(l),
                        Segment::Omega(_) => Err(Error::NonFlat),
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.push(Segment::Omega(period));
            }
        }
        Ok(())
    }

    fn fmt_into(&self, ap: &Alphabet, sep: &str, out: &mut String) {
        match self {
            WordExpr::Lit(l) => out.push_str(&ap.fmt_letter(*l)),
            WordExpr::Concat(a, b) => {
                a.fmt_into(ap, sep, out);
                out.push_str(sep);
                b.fmt_into(ap, sep, out);
            }
            WordExpr::Omega(c) => {
                if let WordExpr::Lit(l) = c.as_ref() {
                    out.push_str(&ap.fmt_letter(*l));
                } else {
                    out.push('(');
                    c.fmt_into(ap, ".", out);
                    out.push(')');
                }
                out.push_str("^w");
            }
        }
    }

    /// Prints e.g. `({p,r}.{q,r})^w . {p,q}^w`.
    pub fn display(&self, ap: &Alphabet) -> String {
        let mut s = String::new();
        self.fmt_into(ap, " . ", &mut s);
        s
    }

    pub fn parse(text: &str, ap: &Alphabet) -> Result<WordExpr> {
        let mut cur = Cursor::new(text);
        let e = parse_seq(&mut cur, ap)?;
        cur.expect_end()?;
        Ok(e)
    }
}

fn parse_seq(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<WordExpr> {
    let mut parts = vec![parse_factor(cur, ap)?];
    while cur.eat('.') {
        parts.push(parse_factor(cur, ap)?);
    }
    Ok(WordExpr::concat_all(parts).expect("nonempty"))
}

fn parse_factor(cur: &mut Cursor<'_>, ap: &Alphabet) -> Result<WordExpr> {
    cur.skip_ws();
    let mut e = match cur.peek() {
        Some('{') => WordExpr::Lit(cur.letter(ap)?),
        Some('(') => {
            cur.bump();
            let inner = parse_seq(cur, ap)?;
            cur.expect(')')?;
            inner
        }
        _ => return cur.err("letter or `(`"),
    };
    while cur.eat_str("^w") {
        e = WordExpr::omega(e);
    }
    Ok(e)
}

/// `|e|` per the ordinal semantics: letters have length 1, `·` adds, `^ω` multiplies by ω.
pub fn expr_length(e: &WordExpr) -> Ordinal {
    match e {
        WordExpr::Lit(_) => Ordinal::nat(1),
        WordExpr::Concat(a, b) => expr_length(a).add(&expr_length(b)),
        WordExpr::Omega(c) => expr_length(c).times_omega(),
    }
}

pub fn complement_word(e: &WordExpr, ap: &Alphabet) -> WordExpr {
    match e {
        WordExpr::Lit(l) => WordExpr::Lit(ap.complement(*l)),
        WordExpr::Concat(a, b) => WordExpr::Concat(Box::new(complement_word(a, ap)), Box::new(complement_word(b, ap))),
        WordExpr::Omega(c) => WordExpr::omega(complement_word(c, ap)),
    }
}

pub fn unfold(e: &WordExpr, k: usize) -> Result<FiniteWord> {
    Ok(e.to_flat()?.unfold(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Letter(Letter),
    /// A nonempty period repeated ω times.
    Omega(Vec<Letter>),
}

/// Position inside a flat word: segment, period copy (0 for plain letters) and offset within the period.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coord {
    pub segment: usize,
    pub period: usize,
    pub offset: usize,
}

/// A flat word expression as a sequence of letters and ω-blocks. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatWord(pub Vec<Segment>);

impl FlatWord {
    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|s| matches!(s, Segment::Letter(_)))
    }

    pub fn concat(&self, other: &FlatWord) -> FlatWord {
        FlatWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn length(&self) -> Ordinal {
        self.0.iter().fold(Ordinal::zero(), |acc, s| {
            acc.add(&match s {
                Segment::Letter(_) => Ordinal::nat(1),
                Segment::Omega(_) => Ordinal::omega(),
            })
        })
    }

    /// Replaces every ω-block by `k` copies of its period.
    pub fn unfold(&self, k: usize) -> FiniteWord {
        self.unfold_coords(k).0
    }

    pub fn unfold_coords(&self, k: usize) -> (FiniteWord, Vec<Coord>) {
        let mut letters = Vec::new();
        let mut coords = Vec::new();
        for (segment, s) in self.0.iter().enumerate() {
            match s {
                Segment::Letter(l) => {
                    letters.push(*l);
                    coords.push(Coord { segment, period: 0, offset: 0 });
                }
                Segment::Omega(p) => {
                    for period in 0..k {
                        for (offset, l) in p.iter().enumerate() {
                            letters.push(*l);
                            coords.push(Coord { segment, period, offset });
                        }
                    }
                }
            }
        }
        (FiniteWord(letters), coords)
    }

    pub fn to_expr(&self) -> Option<WordExpr> {
        let parts = self
            .0
            .iter()
            .map(|s| match s {
                Segment::Letter(l) => WordExpr::Lit(*l),
                Segment::Omega(p) => {
                    WordExpr::omega(WordExpr::concat_all(p.iter().map(|&l| WordExpr::Lit(l)).collect()).expect("nonempty period"))
                }
            })
            .collect();
        WordExpr::concat_all(parts)
    }

    pub fn complement(&self, ap: &Alphabet) -> FlatWord {
        FlatWord(
            self.0
                .iter()
                .map(|s| match s {
                    Segment::Letter(l) => Segment::Letter(ap.complement(*l)),
                    Segment::Omega(p) => Segment::Omega(p.iter().map(|&l| ap.complement(l)).collect()),
                })
                .collect(),
        )
    }
}

impl From<&FiniteWord> for FlatWord {
    fn from(w: &FiniteWord) -> Self {
        FlatWord(w.letters().iter().map(|&l| Segment::Letter(l)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap() -> Alphabet {
        Alphabet::parse("p,q,r").unwrap()
    }

    #[test]
    fn lengths() {
        let ap = ap();
        let len = |s| expr_length(&WordExpr::parse(s, &ap).unwrap()).to_string();
        assert_eq!(len("{q}^w.{p}.{q}^w"), "ω·2");
        assert_eq!(len("{}^w.{p}"), "ω+1");
        assert_eq!(len("{p}"), "1");
        assert_eq!(len("({p}^w)^w"), "ω^2");
    }

    #[test]
    fn print_parse_round_trip() {
        let ap = ap();
        let text = "({p,r}.{q,r})^w . {p,q}^w . ({p,r}.{q,r})^w";
        let e = WordExpr::parse(text, &ap).unwrap();
        assert_eq!(e.display(&ap), text);
        assert_eq!(e.to_flat().unwrap().to_expr().unwrap(), e);
        assert!(WordExpr::parse("{p}^w^w", &ap).unwrap().to_flat().is_err());
    }

    #[test]
    fn unfolding() {
        let ap = Alphabet::parse("p,q").unwrap();
        let u = |s, k| ap.fmt_word(&unfold(&WordExpr::parse(s, &ap).unwrap(), k).unwrap());
        assert_eq!(u("({p}.{q})^w", 2), "{p}.{q}.{p}.{q}");
        assert_eq!(u("{}^w.{p}", 3), "{}.{}.{}.{p}");
        assert_eq!(u("{q}^w.{p}.{q}^w", 1), "{q}.{p}.{q}");
    }

    #[test]
    fn complements() {
        let ap = Alphabet::parse("p,q").unwrap();
        let c = |s: &str| complement_word(&WordExpr::parse(s, &ap).unwrap(), &ap).display(&ap);
        assert_eq!(c("{p}"), "{q}");
        assert_eq!(c("({p,q}.{})^w"), "({}.{p,q})^w");
        let ap1 = Alphabet::parse("p").unwrap();
        assert_eq!(complement_word(&WordExpr::parse("{}^w", &ap1).unwrap(), &ap1).display(&ap1), "{p}^w");
    }
}
