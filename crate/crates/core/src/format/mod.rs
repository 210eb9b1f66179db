//! Line-oriented text formats for every kind of input.
//!
//! A file starts with a header naming its kind and parameters, followed by
//! sparse blocks. `#` starts a comment. Each entry is an index tuple and a
//! scalar (`q(a/b)`, `zeta(n)[c0, c1, …]` or a bare rational), either after
//! the block name on the same line or on the lines following it:
//!
//! ```text
//! hopf dim=2 field=zeta(1)
//! labels: 1 g
//! mult: (0,0,0) q(1)
//! mult:
//!   (0,1,1) q(1)
//!   (1,0,1) q(1)
//! ```
//!
//! | kind      | header                                | blocks |
//! |-----------|---------------------------------------|--------|
//! | `hopf`    | `dim=<d> field=zeta(<n>)`             | `mult (i,j,k)`, `comult (i,j,k)`, `unit (k)`, `counit (i)`, `antipode (i,j)`, `rmatrix (i,j)` |
//! | `module`  | `dim=<m> over=<id>`                   | `action (h,i,j)`: entry `(i,j)` of the matrix of `e_h` |
//! | `modular` | `rank=<r> field=zeta(<n>)`            | `S (i,j)`, `T (i)`, `labels` |
//! | `algebra` | `dim=<d> field=zeta(<n>)`             | `mult (i,j,k)`, `unit (k)` |
//! | `group`   | `order=<m>`                           | `m` rows of the multiplication table |
//!
//! Indices are 0-based and omitted entries are zero.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::azumaya::{AlgebraPresentation, AlgebraTensors};
use crate::error::{Error, Result};
use crate::exact::{CycloScalar, ExactMatrix};
use crate::group::FiniteGroup;
use crate::hopf::{verify_hopf, verify_quasitriangular, HopfPresentation, HopfTensors, RMatrix};
use crate::modular::ModularData;
use crate::rep::{verify_module, HModule};

type Scalar = CycloScalar;

#[cfg(test)]
mod tests;

#[derive(Clone, Debug)]
pub struct HopfFile {
    pub presentation: HopfPresentation,
    pub r: Option<RMatrix>,
}

/// A module file, kept unresolved until its Hopf algebra is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFile {
    pub dim: usize,
    pub over: String,
    pub action: Vec<(usize, usize, usize, Scalar)>,
}

impl ModuleFile {
    pub fn resolve(&self, parent: &Arc<HopfPresentation>) -> Result<HModule> {
        let d = parent.dim();
        let mut mats = vec![ExactMatrix::zeros(self.dim, self.dim); d];
        for (h, i, j, c) in &self.action {
            if *h >= d {
                return Err(Error::DimensionMismatch(format!("action index {h} out of range for dim {d}")));
            }
            *mats[*h].get_mut(*i, *j) += c;
        }
        let m = HModule::new(parent.clone(), self.dim, mats)?;
        if !verify_module(&m) {
            return Err(Error::Validation("module action".into()));
        }
        Ok(m)
    }
}

#[derive(Clone, Debug)]
pub enum Input {
    Hopf(HopfFile),
    Module(ModuleFile),
    Modular(ModularData),
    Algebra(AlgebraPresentation),
    Group(FiniteGroup),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Hopf(_) => "hopf",
            Input::Module(_) => "module",
            Input::Modular(_) => "modular",
            Input::Algebra(_) => "algebra",
            Input::Group(_) => "group",
        }
    }
}

pub fn parse_input(src: &str) -> Result<Input> {
    let doc = Document::read(src)?;
    match doc.kind.as_str() {
        "hopf" => hopf_from(doc).map(Input::Hopf),
        "module" => module_from(doc).map(Input::Module),
        "modular" => modular_from(doc).map(Input::Modular),
        "algebra" => algebra_from(doc).map(Input::Algebra),
        "group" => group_from(doc).map(Input::Group),
        other => Err(Error::Parse { line: doc.header_line, col: 1, message: format!("unknown file kind '{other}'") }),
    }
}

fn expect_kind(doc: &Document, kind: &str) -> Result<()> {
    if doc.kind == kind {
        Ok(())
    } else {
        Err(Error::Parse { line: doc.header_line, col: 1, message: format!("expected a {kind} file, found '{}'", doc.kind) })
    }
}

pub fn parse_hopf(src: &str) -> Result<HopfFile> {
    let doc = Document::read(src)?;
    expect_kind(&doc, "hopf")?;
    hopf_from(doc)
}

pub fn parse_module(src: &str) -> Result<ModuleFile> {
    let doc = Document::read(src)?;
    expect_kind(&doc, "module")?;
    module_from(doc)
}

pub fn parse_modular(src: &str) -> Result<ModularData> {
    let doc = Document::read(src)?;
    expect_kind(&doc, "modular")?;
    modular_from(doc)
}

pub fn parse_algebra(src: &str) -> Result<AlgebraPresentation> {
    let doc = Document::read(src)?;
    expect_kind(&doc, "algebra")?;
    algebra_from(doc)
}

pub fn parse_group(src: &str) -> Result<FiniteGroup> {
    let doc = Document::read(src)?;
    expect_kind(&doc, "group")?;
    group_from(doc)
}

/// Parses `zeta(n)`, `q` or `Q`.
pub fn parse_field(s: &str) -> Option<u32> {
    if s == "q" || s == "Q" {
        return Some(1);
    }
    let n: u32 = s.strip_prefix("zeta(")?.strip_suffix(')')?.trim().parse().ok()?;
    (n > 0).then_some(n)
}

// ---------------------------------------------------------------- reading

struct Entry {
    line: usize,
    col: usize,
    index: Vec<usize>,
    value: Scalar,
}

struct Document {
    kind: String,
    header_line: usize,
    params: Vec<(String, String, usize)>,
    blocks: Vec<(String, Entry)>,
    labels: Option<Vec<String>>,
    /// Non-block lines, for the group table.
    rows: Vec<(usize, String)>,
}

fn perr<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, message: message.into() })
}

impl Document {
    fn read(src: &str) -> Result<Document> {
        let mut lines = src
            .lines()
            .enumerate()
            .map(|(n, raw)| (n + 1, raw.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());
        let Some((header_line, header)) = lines.next() else {
            return perr(1, 1, "empty input");
        };
        let mut tokens = header.split_whitespace();
        let kind = tokens.next().expect("non-empty line").to_string();
        let mut params = Vec::new();
        for tok in tokens {
            let col = column_of(header, tok);
            let Some((k, v)) = tok.split_once('=') else {
                return perr(header_line, col, format!("expected key=value, found '{tok}'"));
            };
            params.push((k.to_string(), v.to_string(), col));
        }
        let mut doc = Document { kind, header_line, params, blocks: Vec::new(), labels: None, rows: Vec::new() };
        let mut current: Option<String> = None;
        for (n, line) in lines {
            let trimmed = line.trim_start();
            let indent = line.len() - trimmed.len();
            let head = trimmed.split(|c: char| c == ':' || c.is_whitespace() || c == '(').next().unwrap_or("");
            let rest_start;
            if !head.is_empty() && trimmed[head.len()..].starts_with(':') {
                if head == "labels" {
                    doc.labels = Some(trimmed[head.len() + 1..].split_whitespace().map(str::to_string).collect());
                    current = None;
                    continue;
                }
                current = Some(head.to_string());
                rest_start = indent + head.len() + 1;
            } else if trimmed.starts_with('(') {
                if current.is_none() {
                    return perr(n, indent + 1, "entry outside of a block");
                }
                rest_start = indent;
            } else {
                doc.rows.push((n, line.to_string()));
                current = None;
                continue;
            }
            let rest = &line[rest_start..];
            if rest.trim().is_empty() {
                continue;
            }
            let entry = parse_entry(n, rest_start, rest)?;
            doc.blocks.push((current.clone().expect("block set"), entry));
        }
        Ok(doc)
    }

    fn param(&self, key: &str) -> Option<(&str, usize)> {
        self.params.iter().find(|(k, _, _)| k == key).map(|(_, v, c)| (v.as_str(), *c))
    }

    fn usize_param(&self, key: &str) -> Result<usize> {
        match self.param(key) {
            Some((v, col)) => v
                .parse()
                .or_else(|_| perr(self.header_line, col, format!("{key} must be a non-negative integer, found '{v}'"))),
            None => perr(self.header_line, 1, format!("header is missing {key}=")),
        }
    }

    fn field(&self) -> Result<u32> {
        match self.param("field") {
            Some((v, col)) => parse_field(v).map_or_else(
                || perr(self.header_line, col, format!("field must be zeta(n) with n ≥ 1, found '{v}'")),
                Ok,
            ),
            None => Ok(1),
        }
    }

    /// Entries of `block`, each checked to have `arity` indices below `bound`.
    fn entries(&self, block: &str, arity: usize, bound: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>> {
        let mut out = Vec::new();
        for (name, e) in &self.blocks {
            if name != block {
                continue;
            }
            if e.index.len() != arity {
                return perr(e.line, e.col, format!("{block} entries take {arity} indices, found {}", e.index.len()));
            }
            for (x, b) in e.index.iter().zip(bound) {
                if x >= b {
                    return perr(e.line, e.col, format!("{block} index {x} out of range (must be < {b})"));
                }
            }
            out.push((e.index.clone(), e.value.clone()));
        }
        Ok(out)
    }

    fn reject_unknown_blocks(&self, known: &[&str]) -> Result<()> {
        for (name, e) in &self.blocks {
            if !known.contains(&name.as_str()) {
                return perr(e.line, 1, format!("unknown block '{name}' in a {} file", self.kind));
            }
        }
        if let Some((n, line)) = self.rows.first() {
            if self.kind != "group" {
                let col = line.len() - line.trim_start().len() + 1;
                return perr(*n, col, "expected a block name or an index tuple");
            }
        }
        Ok(())
    }
}

fn column_of(line: &str, tok: &str) -> usize {
    tok.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_entry(line: usize, offset: usize, text: &str) -> Result<Entry> {
    let lead = text.len() - text.trim_start().len();
    let col = offset + lead + 1;
    let t = text.trim_start();
    if !t.starts_with('(') {
        return perr(line, col, "expected '(' to open an index tuple");
    }
    let Some(close) = t.find(')') else {
        return perr(line, col, "unterminated index tuple");
    };
    let mut index = Vec::new();
    for part in t[1..close].split(',') {
        let p = part.trim();
        match p.parse::<usize>() {
            Ok(i) => index.push(i),
            Err(_) => return perr(line, col, format!("bad index '{p}'")),
        }
    }
    let scalar = t[close + 1..].trim();
    if scalar.is_empty() {
        return perr(line, col + close + 1, "missing scalar after index tuple");
    }
    let value = CycloScalar::parse(scalar).or_else(|m| perr(line, col + close + 2, m))?;
    Ok(Entry { line, col, index, value })
}

fn hopf_from(doc: Document) -> Result<HopfFile> {
    doc.reject_unknown_blocks(&["mult", "comult", "unit", "counit", "antipode", "rmatrix"])?;
    let d = doc.usize_param("dim")?;
    if d == 0 {
        return perr(doc.header_line, 1, "dim must be positive");
    }
    let field = doc.field()?;
    let triple = |b| -> Result<Vec<(usize, usize, usize, Scalar)>> {
        Ok(doc.entries(b, 3, &[d, d, d])?.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect())
    };
    let single = |b| -> Result<Vec<(usize, Scalar)>> {
        Ok(doc.entries(b, 1, &[d])?.into_iter().map(|(i, c)| (i[0], c)).collect())
    };
    let pair = |b| -> Result<Vec<(usize, usize, Scalar)>> {
        Ok(doc.entries(b, 2, &[d, d])?.into_iter().map(|(i, c)| (i[0], i[1], c)).collect())
    };
    if let Some(l) = &doc.labels {
        if l.len() != d {
            return perr(doc.header_line, 1, format!("{} labels for dim {d}", l.len()));
        }
    }
    let t = HopfTensors {
        dim: d,
        field,
        labels: doc.labels.clone(),
        mult: triple("mult")?,
        comult: triple("comult")?,
        unit: single("unit")?,
        counit: single("counit")?,
        antipode: pair("antipode")?,
    };
    let p = HopfPresentation::from_tensors(t)?;
    if let Some(f) = verify_hopf(&p).first_failure() {
        return Err(Error::Validation(f.name.clone()));
    }
    let has_r = doc.blocks.iter().any(|(b, _)| b == "rmatrix");
    let r = if has_r { Some(RMatrix::from_entries(d, &pair("rmatrix")?)?) } else { None };
    if let Some(r) = &r {
        if let Some(f) = verify_quasitriangular(&p, r)?.first_failure() {
            return Err(Error::Validation(f.name.clone()));
        }
    }
    Ok(HopfFile { presentation: p, r })
}

fn module_from(doc: Document) -> Result<ModuleFile> {
    doc.reject_unknown_blocks(&["action"])?;
    let m = doc.usize_param("dim")?;
    let over = doc.param("over").map(|(v, _)| v.to_string()).unwrap_or_default();
    let action = doc
        .entries("action", 3, &[usize::MAX, m, m])?
        .into_iter()
        .map(|(i, c)| (i[0], i[1], i[2], c))
        .collect();
    Ok(ModuleFile { dim: m, over, action })
}

fn modular_from(doc: Document) -> Result<ModularData> {
    doc.reject_unknown_blocks(&["S", "T"])?;
    let r = doc.usize_param("rank")?;
    doc.field()?;
    let mut s = ExactMatrix::zeros(r, r);
    for (i, c) in doc.entries("S", 2, &[r, r])? {
        *s.get_mut(i[0], i[1]) += &c;
    }
    let mut t = ExactMatrix::zeros(r, r);
    for (i, c) in doc.entries("T", 1, &[r])? {
        *t.get_mut(i[0], i[0]) += &c;
    }
    let labels = doc.labels.clone().unwrap_or_else(|| (0..r).map(|i| i.to_string()).collect());
    ModularData::new(labels, s, t)
}

fn algebra_from(doc: Document) -> Result<AlgebraPresentation> {
    doc.reject_unknown_blocks(&["mult", "unit"])?;
    let d = doc.usize_param("dim")?;
    let field = doc.field()?;
    let mult = doc.entries("mult", 3, &[d, d, d])?.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect();
    let unit = doc.entries("unit", 1, &[d])?.into_iter().map(|(i, c)| (i[0], c)).collect();
    AlgebraPresentation::from_tensors(AlgebraTensors { dim: d, field, mult, unit })
}

fn group_from(doc: Document) -> Result<FiniteGroup> {
    doc.reject_unknown_blocks(&[])?;
    let m = doc.usize_param("order")?;
    if doc.rows.len() != m {
        let line = doc.rows.last().map_or(doc.header_line, |(n, _)| *n);
        return perr(line, 1, format!("expected {m} table rows, found {}", doc.rows.len()));
    }
    let mut table = Vec::with_capacity(m);
    for (n, line) in &doc.rows {
        let mut row = Vec::with_capacity(m);
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let col = column_of(line, tok);
            match tok.parse::<usize>() {
                Ok(x) if x < m => row.push(x),
                Ok(x) => return perr(*n, col, format!("element {x} out of range for order {m}")),
                Err(_) => return perr(*n, col, format!("bad table entry '{tok}'")),
            }
        }
        if row.len() != m {
            return perr(*n, 1, format!("expected {m} entries, found {}", row.len()));
        }
        table.push(row);
    }
    FiniteGroup::from_table(table)
}

// ---------------------------------------------------------------- writing

fn tuple(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn field_name(n: u32) -> String {
    format!("zeta({n})")
}

pub fn write_hopf(p: &HopfPresentation, r: Option<&RMatrix>) -> String {
    let t = p.to_tensors();
    let mut out = format!("hopf dim={} field={}\n", t.dim, field_name(t.field));
    if let Some(l) = &t.labels {
        let _ = writeln!(out, "labels: {}", l.join(" "));
    }
    for (i, j, k, c) in &t.mult {
        let _ = writeln!(out, "mult: {} {c}", tuple(&[*i, *j, *k]));
    }
    for (i, j, k, c) in &t.comult {
        let _ = writeln!(out, "comult: {} {c}", tuple(&[*i, *j, *k]));
    }
    for (k, c) in &t.unit {
        let _ = writeln!(out, "unit: {} {c}", tuple(&[*k]));
    }
    for (i, c) in &t.counit {
        let _ = writeln!(out, "counit: {} {c}", tuple(&[*i]));
    }
    for (i, j, c) in &t.antipode {
        let _ = writeln!(out, "antipode: {} {c}", tuple(&[*i, *j]));
    }
    if let Some(r) = r {
        for (i, j, c) in r.entries() {
            let _ = writeln!(out, "rmatrix: {} {c}", tuple(&[i, j]));
        }
    }
    out
}

pub fn write_module(m: &HModule, over: &str) -> String {
    let mut out = format!("module dim={} over={over}\n", m.dim());
    for h in 0..m.parent().dim() {
        let a = m.action_matrix(h);
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                if !a.get(i, j).is_zero() {
                    let _ = writeln!(out, "action: {} {}", tuple(&[h, i, j]), a.get(i, j));
                }
            }
        }
    }
    out
}

pub fn write_modular(d: &ModularData) -> String {
    let r = d.rank();
    let s = d.s();
    let n = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .map(|(i, j)| s.get(i, j).conductor())
        .chain(d.t_diagonal().iter().map(Scalar::conductor))
        .fold(1, |a, b| a / num_integer::gcd(a, b) * b);
    let mut out = format!("modular rank={r} field={}\n", field_name(n));
    let _ = writeln!(out, "labels: {}", d.labels().join(" "));
    for i in 0..r {
        for j in 0..r {
            if !s.get(i, j).is_zero() {
                let _ = writeln!(out, "S: {} {}", tuple(&[i, j]), s.get(i, j));
            }
        }
    }
    for (i, t) in d.t_diagonal().iter().enumerate() {
        let _ = writeln!(out, "T: {} {t}", tuple(&[i]));
    }
    out
}

pub fn write_algebra(a: &AlgebraPresentation) -> String {
    let t = a.to_tensors();
    let mut out = format!("algebra dim={} field={}\n", t.dim, field_name(t.field));
    for (i, j, k, c) in &t.mult {
        let _ = writeln!(out, "mult: {} {c}", tuple(&[*i, *j, *k]));
    }
    for (k, c) in &t.unit {
        let _ = writeln!(out, "unit: {} {c}", tuple(&[*k]));
    }
    out
}

pub fn write_group(g: &FiniteGroup) -> String {
    let mut out = format!("group order={}\n", g.order());
    for row in g.table_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
