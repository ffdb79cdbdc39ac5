//! Element words over the ASCII generator letters `s`, `t`, `r`.
//!
//! Grammar: `word := "" | "1" | factor ("*" factor)*`, `factor := letter ("^" int)?`,
//! whitespace allowed between tokens.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Sigma,
    Tau,
    Rho,
}

impl Generator {
    pub fn letter(self) -> char {
        match self {
            Generator::Sigma => 's',
            Generator::Tau => 't',
            Generator::Rho => 'r',
        }
    }

    pub fn greek(self) -> char {
        match self {
            Generator::Sigma => 'σ',
            Generator::Tau => 'τ',
            Generator::Rho => 'ρ',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        match ch {
            's' => Some(Generator::Sigma),
            't' => Some(Generator::Tau),
            'r' => Some(Generator::Rho),
            _ => None,
        }
    }

    pub fn element(self, g: &GroupParams) -> Element {
        match self {
            Generator::Sigma => g.sigma(),
            Generator::Tau => g.tau(),
            Generator::Rho => g.rho(),
        }
    }
}

/// A product of generator powers; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementWord(pub Vec<(Generator, i64)>);

impl ElementWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.0
    }

    pub fn evaluate(&self, g: &GroupParams) -> Element {
        self.0.iter().fold(g.identity(), |acc, &(gen, k)| {
            g.mul(acc, g.pow(gen.element(g), k))
        })
    }

    /// Unicode rendering, e.g. `στ²ρ⁻¹`.
    pub fn to_unicode(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for &(gen, k) in &self.0 {
            out.push(gen.greek());
            if k != 1 {
                out.push_str(&superscript(k));
            }
        }
        out
    }
}

fn superscript(k: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = String::new();
    if k < 0 {
        s.push('⁻');
    }
    for d in k.unsigned_abs().to_string().bytes() {
        s.push(DIGITS[usize::from(d - b'0')]);
    }
    s
}

impl fmt::Display for ElementWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(gen, k)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", gen.letter())?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ElementWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element_word(s)
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while let Some(ch) = self.peek() {
            if !ch.is_whitespace() {
                break;
            }
            self.pos += ch.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let ch = self.peek()?;
        self.pos += ch.len_utf8();
        Some(ch)
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }
}

pub fn parse_element_word(text: &str) -> Result<ElementWord> {
    let mut cur = Cursor { src: text, pos: 0 };
    cur.skip_ws();
    if cur.peek().is_none() {
        return Ok(ElementWord::identity());
    }
    if cur.peek() == Some('1') {
        cur.bump();
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(ElementWord::identity());
        }
        return cur.error(cur.pos, "`1` must stand alone");
    }

    let mut letters = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let gen = match cur.bump() {
            None => return cur.error(start, "empty operand"),
            Some('*') => return cur.error(start, "empty operand"),
            Some(ch) => match Generator::from_letter(ch) {
                Some(gen) => gen,
                None => return cur.error(start, format!("unknown generator `{ch}`")),
            },
        };
        cur.skip_ws();
        let mut exp = 1i64;
        if cur.peek() == Some('^') {
            cur.bump();
            cur.skip_ws();
            exp = parse_int(&mut cur)?;
        }
        letters.push((gen, exp));
        cur.skip_ws();
        match cur.bump() {
            None => break,
            Some('*') => continue,
            Some(ch) => {
                let offset = cur.pos - ch.len_utf8();
                return cur.error(
                    offset,
                    format!("expected `*` or end of input, found `{ch}`"),
                );
            }
        }
    }
    Ok(ElementWord(letters))
}

fn parse_int(cur: &mut Cursor<'_>) -> Result<i64> {
    let start = cur.pos;
    let negative = match cur.peek() {
        Some('-') => {
            cur.bump();
            true
        }
        Some('+') => {
            cur.bump();
            false
        }
        _ => false,
    };
    let digits_start = cur.pos;
    while matches!(cur.peek(), Some(ch) if ch.is_ascii_digit()) {
        cur.bump();
    }
    if cur.pos == digits_start {
        return cur.error(start, "malformed exponent");
    }
    let digits = &cur.src[digits_start..cur.pos];
    let value: i64 = match digits.parse() {
        Ok(v) => v,
        Err(_) => return cur.error(start, "exponent out of range"),
    };
    Ok(if negative { -value } else { value })
}
