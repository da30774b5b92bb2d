use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 16;

/// A set of atomic propositions, stored as a bitmask over the indices of an [`Alphabet`].
///
/// Letters are ordered as bit-patterns with the alphabetically first atom as the
/// most significant bit, so over `{p,q}` the order is `{} < {q} < {p} < {p,q}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub const EMPTY: Letter = Letter(0);

    pub fn singleton(atom: usize) -> Letter {
        Letter(1 << atom)
    }

    pub fn contains(self, atom: usize) -> bool {
        self.0 & (1 << atom) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Letter) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Letter) -> Letter {
        Letter(self.0 | other.0)
    }

    pub fn without(self, atom: usize) -> Letter {
        Letter(self.0 & !(1 << atom))
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.reverse_bits().cmp(&other.0.reverse_bits())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite, possibly empty, sequence of letters. Ordered shortlex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteWord(pub Vec<Letter>);

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord(letters)
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn tail(&self) -> FiniteWord {
        FiniteWord(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FiniteWord(v)
    }

    pub fn prepend(&self, letter: Letter) -> FiniteWord {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        FiniteWord(v)
    }

    pub fn repeat(letter: Letter, n: usize) -> FiniteWord {
        FiniteWord(vec![letter; n])
    }
}

impl std::ops::Index<usize> for FiniteWord {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl Ord for FiniteWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FiniteWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The declared set of atomic propositions, sorted alphabetically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

pub(crate) fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && s != "true"
        && s != "false"
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        if let Some(bad) = names.iter().find(|n| !is_atom_name(n)) {
            return Err(Error::Alphabet(format!("`{bad}` is not an atom name")));
        }
        names.sort();
        names.dedup();
        if names.is_empty() {
            return Err(Error::Alphabet("no atoms declared".into()));
        }
        if names.len() > MAX_ATOMS {
            return Err(Error::Alphabet(format!("at most {MAX_ATOMS} atoms are supported")));
        }
        Ok(Alphabet { names })
    }

    /// Parses a comma- or whitespace-separated atom list such as `p,q,r`.
    pub fn parse(list: &str) -> Result<Self> {
        Alphabet::new(list.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, atom: usize) -> &str {
        &self.names[atom]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn atom(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UndeclaredAtom(name.to_string()))
    }

    pub fn full(&self) -> Letter {
        Letter((1u32 << self.names.len()) - 1)
    }

    pub fn complement(&self, letter: Letter) -> Letter {
        Letter(!letter.0 & self.full().0)
    }

    pub fn complement_word(&self, w: &FiniteWord) -> FiniteWord {
        FiniteWord(w.0.iter().map(|&l| self.complement(l)).collect())
    }

    /// All letters in canonical order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = (0..=self.full().0).map(Letter).collect();
        v.sort();
        v
    }

    /// All words of exactly `len` letters, in shortlex order.
    pub fn words_of_len(&self, len: usize) -> Vec<FiniteWord> {
        let letters = self.letters();
        let mut out = vec![FiniteWord::empty()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * letters.len());
            for w in &out {
                for &l in &letters {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(FiniteWord(v));
                }
            }
            out = next;
        }
        out
    }

    /// All nonempty words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<FiniteWord> {
        (1..=max_len).flat_map(|n| self.words_of_len(n)).collect()
    }

    pub fn fmt_letter(&self, letter: Letter) -> String {
        let inner: Vec<&str> = letter.atoms().filter(|&i| i < self.len()).map(|i| self.name(i)).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Finite words print as letters joined by `.`; the empty word prints as `()`.
    pub fn fmt_word(&self, w: &FiniteWord) -> String {
        if w.is_empty() {
            return "()".to_string();
        }
        w.0.iter().map(|&l| self.fmt_letter(l)).collect::<Vec<_>>().join(".")
    }

    pub fn parse_letter(&self, text: &str) -> Result<Letter> {
        let mut cur = Cursor::new(text);
        let l = cur.letter(self)?;
        cur.skip_ws();
        cur.expect_end()?;
        Ok(l)
    }

    pub fn parse_word(&self, text: &str) -> Result<FiniteWord> {
        let mut cur = Cursor::new(text);
        let mut letters = vec![cur.letter(self)?];
        loop {
            cur.skip_ws();
            if cur.eat('.') {
                letters.push(cur.letter(self)?);
            } else {
                cur.expect_end()?;
                return Ok(FiniteWord(letters));
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

/// Minimal character cursor shared by the word and schema parsers.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, expected: expected.to_string() })
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("`{c}`"))
        }
    }

    pub fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.peek().is_none() {
            Ok(())
        } else {
            self.err("end of input")
        }
    }

    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    pub fn letter(&mut self, ap: &Alphabet) -> Result<Letter> {
        self.expect('{')?;
        let mut letter = Letter::EMPTY;
        if self.eat('}') {
            return Ok(letter);
        }
        loop {
            let Some(name) = self.ident() else { return self.err("atom") };
            letter = letter.union(Letter::singleton(ap.atom(name)?));
            if self.eat('}') {
                return Ok(letter);
            }
            self.expect(',')?;
        }
    }
}
