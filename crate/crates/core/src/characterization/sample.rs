use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::logic::alphabet::{Alphabet, FiniteWord};
use crate::schematic::SchematicExpr;
use crate::words::WordExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Positive,
    Negative,
}

impl Label {
    pub fn from_bool(b: bool) -> Label {
        if b {
            Label::Positive
        } else {
            Label::Negative
        }
    }

    pub fn is_positive(self) -> bool {
        self == Label::Positive
    }

    pub fn flip(self) -> Label {
        Label::from_bool(!self.is_positive())
    }

    pub fn sign(self) -> char {
        if self.is_positive() {
            '+'
        } else {
            '-'
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    Word(FiniteWord),
    Expr(WordExpr),
    Schema(SchematicExpr),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Word(_) => "word",
            Payload::Expr(_) => "expr",
            Payload::Schema(_) => "schema",
        }
    }

    pub fn display(&self, ap: &Alphabet) -> String {
        match self {
            Payload::Word(w) => ap.fmt_word(w),
            Payload::Expr(e) => e.display(ap),
            Payload::Schema(r) => r.display(ap),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledExample {
    pub payload: Payload,
    pub label: Label,
}

impl LabeledExample {
    pub fn new(payload: Payload, label: Label) -> Self {
        LabeledExample { payload, label }
    }

    pub fn word(w: FiniteWord, label: Label) -> Self {
        LabeledExample::new(Payload::Word(w), label)
    }

    pub fn expr(e: WordExpr, label: Label) -> Self {
        LabeledExample::new(Payload::Expr(e), label)
    }
}

/// Labeled examples over a declared alphabet, without duplicates.
#[derive(Clone, Debug)]
pub struct Sample {
    pub ap: Alphabet,
    examples: Vec<LabeledExample>,
    seen: HashSet<LabeledExample>,
}

impl PartialEq for Sample {
    fn eq(&self, other: &Self) -> bool {
        self.ap == other.ap && self.examples == other.examples
    }
}

impl Eq for Sample {}

impl Sample {
    pub fn new(ap: Alphabet) -> Self {
        Sample { ap, examples: Vec::new(), seen: HashSet::new() }
    }

    pub fn from_examples(ap: Alphabet, examples: impl IntoIterator<Item = LabeledExample>) -> Self {
        let mut s = Sample::new(ap);
        s.extend(examples);
        s
    }

    /// Adds an example; returns `false` if it was already present.
    pub fn push(&mut self, ex: LabeledExample) -> bool {
        if !self.seen.insert(ex.clone()) {
            return false;
        }
        self.examples.push(ex);
        true
    }

    pub fn extend(&mut self, items: impl IntoIterator<Item = LabeledExample>) {
        for ex in items {
            self.push(ex);
        }
    }

    pub fn examples(&self) -> &[LabeledExample] {
        &self.examples
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn positives(&self) -> impl Iterator<Item = &Payload> {
        self.examples.iter().filter(|e| e.label.is_positive()).map(|e| &e.payload)
    }

    pub fn negatives(&self) -> impl Iterator<Item = &Payload> {
        self.examples.iter().filter(|e| !e.label.is_positive()).map(|e| &e.payload)
    }

    /// Positives first, each group in payload order.
    pub fn sorted(mut self) -> Self {
        self.examples.sort_by(|a, b| a.label.cmp(&b.label).then_with(|| a.payload.cmp(&b.payload)));
        self
    }

    pub fn union(&self, other: &Sample) -> Sample {
        let mut s = self.clone();
        s.extend(other.examples.iter().cloned());
        s
    }

    /// Parses the line format: `ap: p q r`, then `+|- word|expr|schema payload`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Sample> {
        let mut ap = None;
        let mut sample: Option<Sample> = None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::SampleFormat { line: line_no, msg };
            if let Some(rest) = line.strip_prefix("ap:") {
                if ap.is_some() {
                    return Err(bad("duplicate `ap:` header".into()));
                }
                let a = Alphabet::parse(rest).map_err(|e| bad(e.to_string()))?;
                sample = Some(Sample::new(a.clone()));
                ap = Some(a);
                continue;
            }
            let (Some(ap), Some(sample)) = (ap.as_ref(), sample.as_mut()) else {
                return Err(bad("missing `ap:` header".into()));
            };
            let mut parts = line.splitn(3, char::is_whitespace);
            let label = match parts.next() {
                Some("+") => Label::Positive,
                Some("-") => Label::Negative,
                other => return Err(bad(format!("expected `+` or `-`, found {other:?}"))),
            };
            let kind = parts.next().unwrap_or("");
            let body = parts.next().unwrap_or("").trim();
            let payload = match kind {
                "word" => Payload::Word(ap.parse_word(body).map_err(|e| bad(e.to_string()))?),
                "expr" => Payload::Expr(WordExpr::parse(body, ap).map_err(|e| bad(e.to_string()))?),
                "schema" => Payload::Schema(SchematicExpr::parse(body, ap).map_err(|e| bad(e.to_string()))?),
                other => return Err(bad(format!("unknown payload kind `{other}`"))),
            };
            sample.push(LabeledExample::new(payload, label));
        }
        sample.ok_or(Error::SampleFormat { line: 0, msg: "missing `ap:` header".into() })
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ap: {}", self.ap)?;
        for ex in &self.examples {
            writeln!(f, "{} {} {}", ex.label.sign(), ex.payload.kind(), ex.payload.display(&self.ap))?;
        }
        Ok(())
    }
}
