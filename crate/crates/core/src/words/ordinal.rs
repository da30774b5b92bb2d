use std::cmp::Ordering;
use std::fmt;

/// An ordinal below ω^ω in Cantor normal form: Σ ω^e·c with strictly decreasing exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<(u32, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn nat(n: u64) -> Self {
        Ordinal::from_terms(vec![(0, n)])
    }

    pub fn omega() -> Self {
        Ordinal::from_terms(vec![(1, 1)])
    }

    /// Normalizes an arbitrary term list (drops zero coefficients, merges and sorts exponents).
    pub fn from_terms(terms: Vec<(u32, u64)>) -> Self {
        terms.into_iter().fold(Ordinal::zero(), |acc, (e, c)| {
            if c == 0 {
                acc
            } else {
                acc.add(&Ordinal { terms: vec![(e, c)] })
            }
        })
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|&(e, _)| e == 0)
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    /// Ordinal sum: summands of `self` below the leading exponent of `other` are absorbed.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(&(lead, lead_c)) = other.terms.first() else { return self.clone() };
        let mut terms: Vec<(u32, u64)> = self.terms.iter().copied().take_while(|&(e, _)| e >= lead).collect();
        let mut rest = other.terms.iter().copied();
        match terms.last_mut() {
            Some((e, c)) if *e == lead => {
                *c += lead_c;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest);
        Ordinal { terms }
    }

    /// `self · ω`, which for a nonzero ordinal below ω^ω is ω^(e+1) with e the leading exponent.
    pub fn times_omega(&self) -> Ordinal {
        match self.terms.first() {
            None => Ordinal::zero(),
            Some(&(e, _)) => Ordinal { terms: vec![(e + 1, 1)] },
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.0.cmp(&b.0).then(a.1.cmp(&b.1));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn ordinal_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.add(b)
}

pub fn ordinal_cmp(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(e, c)| {
                let base = match e {
                    0 => return c.to_string(),
                    1 => "ω".to_string(),
                    _ => format!("ω^{e}"),
                };
                if c == 1 {
                    base
                } else {
                    format!("{base}·{c}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}
