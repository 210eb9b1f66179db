//! Sparse vectors and column-sparse linear maps for large tensor spaces.

use std::collections::HashMap;

use super::cyclo::CycloScalar;
use super::matrix::ExactMatrix;

type Scalar = CycloScalar;

/// A sparse vector: sorted `(index, value)` pairs with nonzero values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn basis(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * s)).collect() }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        acc.add_vec(self, &Scalar::one());
        acc.add_vec(other, &Scalar::from_int(-1));
        acc.finish()
    }

    /// Tensor product with index `self_index * other_len + other_index`.
    pub fn kron(&self, other: &SparseVec, other_len: usize) -> SparseVec {
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other_len + j, a * b));
            }
        }
        SparseVec { entries }
    }
}

/// Hash-based accumulator producing a canonical `SparseVec`.
#[derive(Clone, Default)]
pub struct Accumulator {
    map: HashMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: HashMap::new() }
    }

    pub fn add(&mut self, i: usize, x: Scalar) {
        if x.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(v) => *v += &x,
            None => {
                self.map.insert(i, x);
            }
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec, s: &Scalar) {
        for (i, x) in v.iter() {
            self.add(*i, if s.is_one() { x.clone() } else { x * s });
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.map.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        SparseVec { entries }
    }
}

/// A linear map stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let columns = (0..m.cols()).map(|j| SparseVec::from_dense(&m.column(j))).collect();
        SparseMatrix { rows: m.rows(), columns }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, columns: (0..n).map(SparseVec::basis).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter() {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in v.iter() {
            acc.add_vec(&self.columns[*j], x);
        }
        acc.finish()
    }

    /// Applies `self` to one block of tensor factors: `id_pre ⊗ self ⊗ id_suffix`,
    /// where `suffix` is the dimension of the factors to the right.
    pub fn apply_block(&self, v: &SparseVec, suffix: usize) -> SparseVec {
        let (rows, cols, s) = (self.rows, self.cols(), suffix);
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            let (pre, mid, suf) = (i / (cols * s), (i / s) % cols, i % s);
            for (o, c) in self.columns[mid].iter() {
                acc.add((pre * rows + o) * s + suf, x * c);
            }
        }
        acc.finish()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "composable shapes");
        SparseMatrix {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.columns {
            for b in &other.columns {
                columns.push(a.kron(b, other.rows));
            }
        }
        SparseMatrix { rows: self.rows * other.rows, columns }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter() {
                cols[*i].push((j, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols(), columns: cols.into_iter().map(|entries| SparseVec { entries }).collect() }
    }

    /// `Σ c_k M_k` for maps of a common shape.
    pub fn linear_combination<'a>(
        rows: usize,
        cols: usize,
        terms: impl IntoIterator<Item = (&'a SparseMatrix, Scalar)>,
    ) -> SparseMatrix {
        let mut accs: Vec<Accumulator> = (0..cols).map(|_| Accumulator::new()).collect();
        for (m, c) in terms {
            for (j, col) in m.columns.iter().enumerate() {
                accs[j].add_vec(col, &c);
            }
        }
        SparseMatrix { rows, columns: accs.into_iter().map(Accumulator::finish).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols()
            && self.columns.iter().enumerate().all(|(j, c)| c.len() == 1 && c.iter().all(|(i, x)| *i == j && x.is_one()))
    }
}
