use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("undeclared atom `{0}`")]
    UndeclaredAtom(String),
    #[error("invalid alphabet: {0}")]
    Alphabet(String),
    #[error("formulas are evaluated on nonempty words only")]
    EmptyWord,
    #[error("`{node}` is outside the {fragment} fragment")]
    Fragment { fragment: String, node: String },
    #[error("word expression is not flat (nested omega-power)")]
    NonFlat,
    #[error("work budget of {0} exhausted")]
    Budget(u64),
    #[error("cannot evaluate {formula} on {payload}")]
    Unevaluable { formula: String, payload: String },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("target does not fit the sample (example {index})")]
    TargetDoesNotFit { index: usize },
    #[error("{0}")]
    Classification(String),
    #[error("adversary: {0}")]
    Adversary(String),
    #[error("enumeration: {0}")]
    Enumeration(String),
    #[error("sample line {line}: {msg}")]
    SampleFormat { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
