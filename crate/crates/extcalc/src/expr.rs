//! Functor expressions: `atom := (G|L|S|I) ["^" d] ["(" r ")"]`,
//! `word := atom {"*" atom}`, with `d = 1` and `r = 0` by default.
//! Blanks between tokens are ignored.

use extcalc_core::pcalc::{FunctorAtom, FunctorWord};
use extcalc_core::FunctorKind;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_blanks(&mut self) {
        while self.text[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_blanks();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset, message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |x| format!("'{x}'"));
            self.fail(self.pos, format!("expected '{c}', found {found}"))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_blanks();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.fail(start, "expected a number");
        }
        self.pos += len;
        self.text[start..self.pos].parse().or_else(|_| self.fail(start, "number too large"))
    }

    fn atom(&mut self) -> Result<FunctorAtom, ParseError> {
        self.skip_blanks();
        let start = self.pos;
        let kind = match self.peek().and_then(FunctorKind::from_letter) {
            Some(k) => k,
            None => return self.fail(start, "expected one of G, L, S, I"),
        };
        self.pos += 1;
        let star = if self.eat('^') { self.number()? } else { 1 };
        let twist = if self.eat('(') {
            let r = self.number()?;
            self.expect(')')?;
            r
        } else {
            0
        };
        FunctorAtom::new(kind, star, twist).or_else(|e| self.fail(start, e.to_string()))
    }
}

pub fn parse_word(text: &str) -> Result<FunctorWord, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut factors = vec![cur.atom()?];
    while cur.eat('*') {
        factors.push(cur.atom()?);
    }
    if cur.peek().is_some() {
        return cur.fail(cur.pos, "expected '*' or end of input");
    }
    Ok(FunctorWord::new(factors))
}

pub fn format_atom(a: &FunctorAtom) -> String {
    let mut out = a.kind.letter().to_string();
    if a.star != 1 {
        out.push_str(&format!("^{}", a.star));
    }
    if a.twist != 0 {
        out.push_str(&format!("({})", a.twist));
    }
    out
}

/// Canonical text of a word; `parse_word` maps it back to the same word.
pub fn format_word(w: &FunctorWord) -> String {
    w.factors.iter().map(format_atom).collect::<Vec<_>>().join("*")
}

pub fn latex_kind(k: FunctorKind) -> &'static str {
    match k {
        FunctorKind::Gamma => "\\Gamma",
        FunctorKind::Lambda => "\\Lambda",
        FunctorKind::Sym => "S",
        FunctorKind::Id => "I",
    }
}

pub fn latex_word(w: &FunctorWord) -> String {
    let atom = |a: &FunctorAtom| {
        let mut sup = String::new();
        if a.star != 1 {
            sup.push_str(&a.star.to_string());
        }
        if a.twist != 0 {
            sup.push_str(&format!("({})", a.twist));
        }
        if sup.is_empty() {
            latex_kind(a.kind).to_string()
        } else {
            format!("{}^{{{sup}}}", latex_kind(a.kind))
        }
    };
    w.factors.iter().map(atom).collect::<Vec<_>>().join(" \\otimes ")
}
