//! Parenthesised prefix certificates:
//!
//! ```text
//! (id "c")   (in "a" "b")   (tx "a" "b" <d>)   (trx <d1> <d2>)
//! ```
//!
//! Labels are double-quoted with `\"` and `\\` escapes. Whitespace between
//! tokens is free; `Display` prints the canonical single-line form.

use std::fmt;

use super::Derivation;
use crate::error::{Error, Result};

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::Id { element } => {
                f.write_str("(id ")?;
                quoted(f, element)?;
            }
            Derivation::In { source, target } => {
                f.write_str("(in ")?;
                quoted(f, source)?;
                f.write_str(" ")?;
                quoted(f, target)?;
            }
            Derivation::Tx { source, via, premise } => {
                f.write_str("(tx ")?;
                quoted(f, source)?;
                f.write_str(" ")?;
                quoted(f, via)?;
                write!(f, " {premise}")?;
            }
            Derivation::Trx { left, right } => write!(f, "(trx {left} {right}")?,
        }
        f.write_str(")")
    }
}

fn quoted(f: &mut fmt::Formatter<'_>, label: &str) -> fmt::Result {
    f.write_str("\"")?;
    for c in label.chars() {
        if c == '"' || c == '\\' {
            f.write_str("\\")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("\"")
}

/// Parses a certificate. Trailing whitespace is allowed, anything else
/// after the tree is an error.
pub fn parse_certificate(text: &str) -> Result<Derivation> {
    let mut p = Parser { text, pos: 0 };
    let d = p.derivation()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input after certificate"));
    }
    Ok(d)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::CertificateSyntax {
            offset: self.pos,
            message: message.to_owned(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{want}`")))
        }
    }

    fn keyword(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            self.pos += c.len_utf8();
        }
        if start == self.pos {
            return Err(self.error("expected a rule name"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn label(&mut self) -> Result<String> {
        self.expect('"')?;
        let mut out = String::new();
        loop {
            let c = self.peek().ok_or_else(|| self.error("unterminated label"))?;
            self.pos += c.len_utf8();
            match c {
                '"' => return Ok(out),
                '\\' => {
                    let e = self.peek().ok_or_else(|| self.error("unterminated escape"))?;
                    if e != '"' && e != '\\' {
                        return Err(self.error("unknown escape"));
                    }
                    self.pos += 1;
                    out.push(e);
                }
                c => out.push(c),
            }
        }
    }

    fn derivation(&mut self) -> Result<Derivation> {
        self.expect('(')?;
        let start = self.pos;
        let d = match self.keyword()? {
            "id" => Derivation::id(self.label()?),
            "in" => {
                let source = self.label()?;
                Derivation::fact(source, self.label()?)
            }
            "tx" => {
                let source = self.label()?;
                let via = self.label()?;
                Derivation::tx(source, via, self.derivation()?)
            }
            "trx" => {
                let left = self.derivation()?;
                Derivation::trx(left, self.derivation()?)
            }
            _ => {
                self.pos = start;
                return Err(self.error("unknown rule (want id, in, tx or trx)"));
            }
        };
        self.expect(')')?;
        Ok(d)
    }
}
