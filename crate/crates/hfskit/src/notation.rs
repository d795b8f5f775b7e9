//! Canonical textual notation for HFS values.
//!
//! Grammar: `hfs := NAT | '{' [hfs (',' hfs)*] '}'`. Whitespace between
//! tokens is ignored on input and never produced on output. Printing always
//! emits members in canonical (ascending code) order; parsing accepts any
//! member order but rejects duplicates. A bare numeral `k` denotes the
//! urelement `k` and is only legal when `k` lies below the ulimit of the
//! parsing context.

use std::fmt;

use crate::bitset::Nat;
use crate::error::{Error, Result};
use crate::hfs::{Hfs, HfsView, Ulimit};

impl fmt::Display for Hfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.view() {
            HfsView::Urelement(k) => write!(f, "{k}"),
            HfsView::Set(members) => {
                write!(f, "{{")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Canonical rendering of `h`; total, and independent of any ulimit.
pub fn print_hfs(h: &Hfs) -> String {
    h.to_string()
}

/// Parses the brace/comma notation. `parse_hfs(print_hfs(h), u)` returns `h`
/// whenever `h` respects `u`.
pub fn parse_hfs(text: &str, ulimit: &Ulimit) -> Result<Hfs> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let h = p.term(ulimit)?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.syntax("trailing input after complete term"));
    }
    Ok(h)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn term(&mut self, ulimit: &Ulimit) -> Result<Hfs> {
        match self.peek() {
            Some(b'{') => self.set(ulimit),
            Some(b) if b.is_ascii_digit() => self.urelement(ulimit),
            Some(b) => Err(self.syntax(format!(
                "expected '{{' or a digit, found {:?}",
                b as char
            ))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn set(&mut self, ulimit: &Ulimit) -> Result<Hfs> {
        self.pos += 1; // consume '{'
        self.skip_ws();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(Hfs::empty());
        }
        let mut members = Vec::new();
        loop {
            members.push(self.term(ulimit)?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'}') => {
                    self.pos += 1;
                    return Hfs::set(members);
                }
                Some(b) => {
                    return Err(self.syntax(format!(
                        "expected ',' or '}}', found {:?}",
                        b as char
                    )))
                }
                None => return Err(self.syntax("unclosed '{'")),
            }
        }
    }

    fn urelement(&mut self, ulimit: &Ulimit) -> Result<Hfs> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let k = Nat::parse_bytes(&self.bytes[start..self.pos], 10)
            .expect("scanned digits form a decimal numeral");
        if ulimit.admits(&k) {
            Ok(Hfs::urelement(k))
        } else {
            Err(Error::UrelementOutOfRange {
                urelement: k,
                ulimit: ulimit.as_nat().clone(),
            })
        }
    }
}
