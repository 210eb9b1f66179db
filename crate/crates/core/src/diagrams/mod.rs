//! Typed string diagrams over `Rep(H)` and their exact evaluation.
//!
//! A diagram is read bottom to top as a list of slices. Each slice is a
//! horizontal row of generators whose input wires, concatenated, must equal
//! the wires leaving the slice below. Evaluation binds every object symbol to
//! an [`HModule`] and composes the slices as linear maps.
//!
//! Crossings: `braid(a, b)` is `σ_{a,b}`; `braid_inverse(a, b)` is
//! `σ_{b,a}⁻¹`. Both take `a⊗b` to `b⊗a`.

mod named;
mod parse;

pub use named::{named_diagram, DiagramName};
pub use parse::parse_diagram;

use std::collections::HashMap;
use std::fmt;

use crate::exact::{ExactMatrix, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::hopf::RMatrix;
use crate::rep::{braiding_inverse_sparse, braiding_sparse, coev, dual_module, ev, tensor_module, HModule};

/// An object symbol under `duals` applications of the left dual.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub symbol: String,
    pub duals: u32,
}

impl Atom {
    pub fn new(symbol: &str) -> Self {
        Atom { symbol: symbol.to_string(), duals: 0 }
    }

    pub fn dual(&self) -> Self {
        Atom { symbol: self.symbol.clone(), duals: self.duals + 1 }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.symbol, "~".repeat(self.duals as usize))
    }
}

/// A tensor product of atoms; the empty list is the unit object.
pub type WireType = Vec<Atom>;

/// Shorthand for building wire types: `wires("x~ x y")`.
pub fn wires(spec: &str) -> WireType {
    spec.split_whitespace()
        .map(|w| {
            let symbol = w.trim_end_matches('~');
            Atom { symbol: symbol.to_string(), duals: (w.len() - symbol.len()) as u32 }
        })
        .collect()
}

fn show(w: &[Atom]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(Atom::to_string).collect::<Vec<_>>().join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Id(WireType),
    Braid(WireType, WireType),
    BraidInverse(WireType, WireType),
    /// `a^∨ ⊗ a -> 1`
    Ev(Atom),
    /// `1 -> a ⊗ a^∨`
    Coev(Atom),
    Box { name: String, input: WireType, output: WireType },
}

impl Generator {
    pub fn input(&self) -> WireType {
        match self {
            Generator::Id(w) => w.clone(),
            Generator::Braid(a, b) | Generator::BraidInverse(a, b) => [a.clone(), b.clone()].concat(),
            Generator::Ev(a) => vec![a.dual(), a.clone()],
            Generator::Coev(_) => Vec::new(),
            Generator::Box { input, .. } => input.clone(),
        }
    }

    pub fn output(&self) -> WireType {
        match self {
            Generator::Id(w) => w.clone(),
            Generator::Braid(a, b) | Generator::BraidInverse(a, b) => [b.clone(), a.clone()].concat(),
            Generator::Ev(_) => Vec::new(),
            Generator::Coev(a) => vec![a.clone(), a.dual()],
            Generator::Box { output, .. } => output.clone(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Id(w) => write!(f, "id({})", show(w)),
            Generator::Braid(a, b) => write!(f, "braid({}, {})", show(a), show(b)),
            Generator::BraidInverse(a, b) => write!(f, "braid_inverse({}, {})", show(a), show(b)),
            Generator::Ev(a) => write!(f, "ev({a})"),
            Generator::Coev(a) => write!(f, "coev({a})"),
            Generator::Box { name, input, output } => write!(f, "box({name}: {} -> {})", show(input), show(output)),
        }
    }
}

pub type Slice = Vec<Generator>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub input: WireType,
    pub output: WireType,
    pub slices: Vec<Slice>,
}

impl Diagram {
    /// Declares input and output as the first slice's input and the last slice's output.
    pub fn from_slices(slices: Vec<Slice>) -> Self {
        let input = slices.first().map(|s| s.iter().flat_map(Generator::input).collect()).unwrap_or_default();
        let output = slices.last().map(|s| s.iter().flat_map(Generator::output).collect()).unwrap_or_default();
        Diagram { input, output, slices }
    }
}

/// Text form accepted by [`parse_diagram`].
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "in: {}", show(&self.input))?;
        writeln!(f, "out: {}", show(&self.output))?;
        for s in &self.slices {
            let gens: Vec<String> = s.iter().map(Generator::to_string).collect();
            writeln!(f, "{}", gens.join(", "))?;
        }
        Ok(())
    }
}

fn first_difference(a: &[Atom], b: &[Atom]) -> usize {
    a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()))
}

/// The wire types between slices, starting with the declared input.
pub fn typecheck(d: &Diagram) -> Result<Vec<WireType>> {
    let mut types = vec![d.input.clone()];
    let mut current = d.input.clone();
    for (k, slice) in d.slices.iter().enumerate() {
        let input: WireType = slice.iter().flat_map(Generator::input).collect();
        if input != current {
            let position = first_difference(&current, &input);
            return Err(Error::TypeMismatch {
                slice: k,
                position,
                detail: format!("slice expects {} but receives {}", show(&input), show(&current)),
            });
        }
        current = slice.iter().flat_map(Generator::output).collect();
        types.push(current.clone());
    }
    if current != d.output {
        return Err(Error::TypeMismatch {
            slice: d.slices.len(),
            position: first_difference(&current, &d.output),
            detail: format!("diagram declares output {} but produces {}", show(&d.output), show(&current)),
        });
    }
    Ok(types)
}

struct Step {
    /// product of the dimensions of the wires to the right
    suffix: usize,
    map: SparseMatrix,
}

/// A type-checked diagram with all local maps precomputed.
pub struct Evaluator {
    in_dim: usize,
    out_dim: usize,
    steps: Vec<Step>,
}

struct Context<'a> {
    binding: &'a HashMap<String, HModule>,
    boxes: &'a HashMap<String, ExactMatrix>,
    r: &'a RMatrix,
    modules: HashMap<Atom, HModule>,
}

impl Context<'_> {
    fn module(&mut self, a: &Atom) -> Result<HModule> {
        if let Some(m) = self.modules.get(a) {
            return Ok(m.clone());
        }
        let m = if a.duals == 0 {
            self.binding.get(&a.symbol).cloned().ok_or_else(|| Error::UnboundSymbol(a.symbol.clone()))?
        } else {
            let inner = Atom { symbol: a.symbol.clone(), duals: a.duals - 1 };
            dual_module(&self.module(&inner)?)
        };
        self.modules.insert(a.clone(), m.clone());
        Ok(m)
    }

    fn tensor(&mut self, w: &[Atom]) -> Result<Option<HModule>> {
        let mut acc: Option<HModule> = None;
        for a in w {
            let m = self.module(a)?;
            acc = Some(match acc {
                None => m,
                Some(prev) => tensor_module(&prev, &m)?,
            });
        }
        Ok(acc)
    }

    fn dim(&mut self, w: &[Atom]) -> Result<usize> {
        w.iter().map(|a| self.module(a).map(|m| m.dim())).product()
    }

    /// `None` for maps that act as the identity.
    fn local(&mut self, g: &Generator) -> Result<Option<SparseMatrix>> {
        let map = match g {
            Generator::Id(_) => None,
            Generator::Braid(a, b) | Generator::BraidInverse(a, b) => {
                match (self.tensor(a)?, self.tensor(b)?) {
                    (Some(ma), Some(mb)) => Some(if matches!(g, Generator::Braid(..)) {
                        braiding_sparse(&ma, &mb, self.r)?
                    } else {
                        braiding_inverse_sparse(&ma, &mb, self.r)?
                    }),
                    // crossing with the unit object is the identity
                    _ => None,
                }
            }
            Generator::Ev(a) => Some(ev(&self.module(a)?)),
            Generator::Coev(a) => Some(coev(&self.module(a)?)),
            Generator::Box { name, input, output } => {
                let in_dim = self.dim(input)?;
                let out_dim = self.dim(output)?;
                let m = self.boxes.get(name).ok_or_else(|| Error::UnboundSymbol(name.clone()))?;
                if m.rows() != out_dim || m.cols() != in_dim {
                    return Err(Error::ShapeMismatch(format!(
                        "box {name} is {}×{} but its wires need {out_dim}×{in_dim}",
                        m.rows(),
                        m.cols()
                    )));
                }
                Some(SparseMatrix::from_dense(m))
            }
        };
        Ok(map)
    }
}

impl Evaluator {
    pub fn new(
        d: &Diagram,
        binding: &HashMap<String, HModule>,
        boxes: &HashMap<String, ExactMatrix>,
        r: &RMatrix,
    ) -> Result<Self> {
        let types = typecheck(d)?;
        let mut ctx = Context { binding, boxes, r, modules: HashMap::new() };
        let in_dim = ctx.dim(&types[0])?;
        let out_dim = ctx.dim(types.last().expect("at least the input type"))?;
        let mut steps = Vec::new();
        for (k, slice) in d.slices.iter().enumerate() {
            let mut rest: WireType = types[k].clone();
            for g in slice {
                let gin = g.input();
                rest.drain(..gin.len());
                if let Some(map) = ctx.local(g)? {
                    steps.push(Step { suffix: ctx.dim(&rest)?, map });
                }
            }
        }
        Ok(Evaluator { in_dim, out_dim, steps })
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for step in &self.steps {
            v = step.map.apply_block(&v, step.suffix);
        }
        v
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.out_dim, (0..self.in_dim).map(|j| self.apply(&SparseVec::basis(j))).collect())
    }
}

/// Evaluates `d` as a dense `dim(output) × dim(input)` matrix.
pub fn evaluate(
    d: &Diagram,
    binding: &HashMap<String, HModule>,
    boxes: &HashMap<String, ExactMatrix>,
    r: &RMatrix,
) -> Result<ExactMatrix> {
    Ok(Evaluator::new(d, binding, boxes, r)?.to_sparse().to_dense())
}

#[cfg(test)]
mod tests;
