//! Hypergraphs as one level of the set codec.
//!
//! A hypergraph here is a finite set of hyperedges, each hyperedge a finite
//! set of naturals (vertex indices). Decoding applies [`nat_to_set`] twice:
//! once to split the code into edge codes, once per edge. The vertex indices
//! themselves stay flat numbers, so this codec ignores any urelement limit.

use std::fmt;

use crate::bitset::{self, set_to_nat, Nat, NatSet};
use crate::error::{Error, Result};

/// A set of hyperedges kept ascending by edge code, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    edges: Vec<NatSet>,
}

impl Hypergraph {
    /// Builds a hypergraph from edges in any order; equal edges are rejected.
    pub fn new(edges: Vec<NatSet>) -> Result<Self> {
        let mut keyed = edges
            .into_iter()
            .map(|e| Ok((set_to_nat(&e)?, e)))
            .collect::<Result<Vec<_>>>()?;
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateHyperedge {
                    edge: w[0].1.to_string(),
                });
            }
        }
        Ok(Hypergraph {
            edges: keyed.into_iter().map(|(_, e)| e).collect(),
        })
    }

    /// The hypergraph with no edges.
    pub fn empty() -> Self {
        Hypergraph::default()
    }

    /// Edges in ascending code order.
    pub fn edges(&self) -> &[NatSet] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Decodes `n` into a hypergraph: bit positions become edge codes, each edge
/// code becomes a set of vertices.
pub fn nat_to_hypergraph(n: &Nat) -> Hypergraph {
    let edges = bitset::bit_elements(n)
        .map(|e| bitset::nat_to_set(&e))
        .collect();
    // bit positions arrive ascending, so edges are already in canonical order
    Hypergraph { edges }
}

/// Inverse of [`nat_to_hypergraph`].
pub fn hypergraph_to_nat(hg: &Hypergraph) -> Result<Nat> {
    let codes = hg
        .edges
        .iter()
        .map(set_to_nat)
        .collect::<Result<Vec<_>>>()?;
    bitset::sum_of_exponents(codes.iter())
}

/// Parses the brace/comma notation for hypergraphs, e.g. `{{0,1},{2}}`.
/// Edges may come in any order; duplicate edges and duplicate vertices
/// within an edge are rejected.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let hg = p.hypergraph()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.syntax("trailing input after complete hypergraph"));
    }
    Ok(hg)
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

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected {:?}", byte as char)))
        }
    }

    fn hypergraph(&mut self) -> Result<Hypergraph> {
        let edges = self.braced_list(Self::edge)?;
        Hypergraph::new(edges)
    }

    fn edge(&mut self) -> Result<NatSet> {
        let vertices = self.braced_list(Self::vertex)?;
        NatSet::new(vertices)
    }

    fn vertex(&mut self) -> Result<Nat> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a decimal numeral"));
        }
        Ok(Nat::parse_bytes(&self.bytes[start..self.pos], 10)
            .expect("scanned digits form a decimal numeral"))
    }

    fn braced_list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(b'{')?;
        self.skip_ws();
        let mut items = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(item(self)?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(items);
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
}
