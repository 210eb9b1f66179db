//! Text format for diagrams.
//!
//! ```text
//! # comment
//! in: x~ * x            (optional; defaults to the first slice's input)
//! out: 1                (optional; defaults to the last slice's output)
//! id(x~), coev(y), id(x) ; braid_inverse(x~, y), braid_inverse(y~, x)
//! id(y), ev(x), id(y~)
//! ```
//!
//! Slices are separated by newlines or `;` and listed bottom to top.
//! Generators within a slice are separated by `,`:
//!
//! - `id(W)`, `braid(W, W)`, `braid_inverse(W, W)` (alias `binv`)
//! - `ev(A)`: `A~ * A -> 1`; `coev(A)`: `1 -> A * A~`
//! - `box(name: W -> W)`
//!
//! A wire type `W` is `1` or atoms joined by `*` or whitespace; an atom `A` is
//! an identifier followed by any number of `~` dual markers.

use super::{Atom, Diagram, Generator, Slice, WireType};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && matches!(self.chars[self.pos], ' ' | '\t' | '\r') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected '{c}', found '{got}'")),
                None => self.err(format!("expected '{c}', found end of line")),
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(self.pos) {
                Some(c) => self.err(format!("expected a name, found '{c}'")),
                None => self.err("expected a name, found end of line"),
            };
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Atom> {
        let symbol = self.ident()?;
        let mut duals = 0;
        while self.pos < self.chars.len() && self.chars[self.pos] == '~' {
            duals += 1;
            self.pos += 1;
        }
        Ok(Atom { symbol, duals })
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_')
    }

    fn wire_type(&mut self) -> Result<WireType> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut w = vec![self.atom()?];
        loop {
            if self.eat('*') || self.starts_atom() {
                w.push(self.atom()?);
            } else {
                return Ok(w);
            }
        }
    }

    fn generator(&mut self) -> Result<Generator> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        self.expect('(')?;
        let g = match name.as_str() {
            "id" => Generator::Id(self.wire_type()?),
            "braid" | "braid_inverse" | "binv" => {
                let a = self.wire_type()?;
                self.expect(',')?;
                let b = self.wire_type()?;
                if name == "braid" {
                    Generator::Braid(a, b)
                } else {
                    Generator::BraidInverse(a, b)
                }
            }
            "ev" => Generator::Ev(self.atom()?),
            "coev" => Generator::Coev(self.atom()?),
            "box" => {
                let name = self.ident()?;
                self.expect(':')?;
                let input = self.wire_type()?;
                self.expect('-')?;
                self.expect('>')?;
                let output = self.wire_type()?;
                Generator::Box { name, input, output }
            }
            other => {
                self.pos = start;
                return self.err(format!("unknown generator '{other}'"));
            }
        };
        self.expect(')')?;
        Ok(g)
    }

    /// Slices on one line, separated by `;`.
    fn slices(&mut self) -> Result<Vec<Slice>> {
        let mut out = Vec::new();
        loop {
            if self.at_end() {
                return Ok(out);
            }
            if self.eat(';') {
                continue;
            }
            let mut slice = vec![self.generator()?];
            while self.eat(',') {
                slice.push(self.generator()?);
            }
            out.push(slice);
            if !self.at_end() && !self.eat(';') {
                let c = self.peek().expect("not at end");
                return self.err(format!("expected ',' or ';' between generators, found '{c}'"));
            }
        }
    }
}

pub fn parse_diagram(src: &str) -> Result<Diagram> {
    let mut input = None;
    let mut output = None;
    let mut slices = Vec::new();
    for (n, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(line, n + 1);
        if cur.at_end() {
            continue;
        }
        let trimmed = line.trim_start();
        let header = ["in:", "out:"].into_iter().find(|h| trimmed.starts_with(h));
        if let Some(h) = header {
            cur.pos = line.chars().count() - trimmed.chars().count() + h.len();
            let w = cur.wire_type()?;
            if !cur.at_end() {
                return cur.err("unexpected text after wire type");
            }
            if h == "in:" {
                input = Some(w);
            } else {
                output = Some(w);
            }
            continue;
        }
        slices.extend(cur.slices()?);
    }
    let mut d = Diagram::from_slices(slices);
    if let Some(w) = input {
        d.input = w;
    }
    if let Some(w) = output {
        d.output = w;
    }
    Ok(d)
}
