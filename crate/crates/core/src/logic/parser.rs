use crate::error::{Error, Result};
use crate::logic::alphabet::{is_atom_name, Alphabet};
use crate::logic::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    True,
    False,
    Not,
    Next,
    Eventually,
    StrictEventually,
    Globally,
    StrictGlobally,
    Until,
    And,
    Or,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '!' => Some(Tok::Not),
            '&' => Some(Tok::And),
            '|' => Some(Tok::Or),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let tok = match word {
                "true" => Tok::True,
                "false" => Tok::False,
                "X" => Tok::Next,
                "F" => Tok::Eventually,
                "G" => Tok::Globally,
                "sF" => Tok::StrictEventually,
                "sG" => Tok::StrictGlobally,
                "U" => Tok::Until,
                w if is_atom_name(w) => Tok::Atom(w.to_string()),
                _ => {
                    return Err(Error::Syntax { pos: start, expected: "atom, constant or operator".into() })
                }
            };
            out.push((start, tok));
            continue;
        }
        return Err(Error::Syntax { pos: i, expected: "formula token".into() });
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    ap: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].1
    }

    fn pos(&self) -> usize {
        self.toks[self.i].0
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), expected: expected.into() })
    }

    fn or(&mut self) -> Result<Formula> {
        let mut f = self.and()?;
        while *self.peek() == Tok::Or {
            self.i += 1;
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut f = self.until()?;
        while *self.peek() == Tok::And {
            self.i += 1;
            f = Formula::and(f, self.until()?);
        }
        Ok(f)
    }

    fn until(&mut self) -> Result<Formula> {
        let f = self.unary()?;
        if *self.peek() != Tok::Until {
            return Ok(f);
        }
        self.i += 1;
        let g = self.unary()?;
        if *self.peek() == Tok::Until {
            return self.fail("parentheses around a chain of `U`");
        }
        Ok(Formula::until(f, g))
    }

    fn unary(&mut self) -> Result<Formula> {
        let tok = self.peek().clone();
        let wrap: fn(Formula) -> Formula = match tok {
            Tok::Not => Formula::not,
            Tok::Next => Formula::next,
            Tok::Eventually => Formula::eventually,
            Tok::StrictEventually => Formula::strict_eventually,
            Tok::Globally => Formula::globally,
            Tok::StrictGlobally => Formula::strict_globally,
            _ => return self.primary(),
        };
        self.i += 1;
        Ok(wrap(self.unary()?))
    }

    fn primary(&mut self) -> Result<Formula> {
        let tok = self.peek().clone();
        self.i += 1;
        match tok {
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Atom(name) => Ok(Formula::Atom(self.ap.atom(&name)?)),
            Tok::LParen => {
                let f = self.or()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("`)`");
                }
                self.i += 1;
                Ok(f)
            }
            _ => {
                self.i -= 1;
                self.fail("atom, constant, unary operator or `(`")
            }
        }
    }
}

/// Parses the ASCII formula syntax: `!`, `X`, `F`, `sF`, `G`, `sG`, `U`, `&`, `|`.
pub fn parse_formula(text: &str, ap: &Alphabet) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, i: 0, ap };
    let f = p.or()?;
    if *p.peek() != Tok::End {
        return p.fail("end of input");
    }
    Ok(f)
}
