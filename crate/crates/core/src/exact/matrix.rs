//! Dense exact matrices and Gauss-Jordan elimination over cyclotomic fields.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::cyclo::CycloScalar;
use crate::error::{Error, Result};

type Scalar = CycloScalar;

/// Dense row-major matrix over `Q(zeta_n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Builds from integer rows; handy in tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| Scalar::from_int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x * s)
    }

    /// Entrywise Galois conjugation `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        *out.get_mut(i, j) += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the index of `self` is the major one.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = ExactMatrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.push(self.row(i).to_vec());
        }
        red.rank()
    }

    /// Basis of the right kernel `{x : M x = 0}`, as vectors.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.push(self.row(i).to_vec());
        }
        red.kernel()
    }

    /// Solves `M X = B`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if b.rows != self.rows {
            return Err(Error::ShapeMismatch("right-hand side row count".into()));
        }
        let n = self.cols;
        let mut red = RowReducer::new(n + b.cols);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.extend_from_slice(b.row(i));
            red.push(row);
        }
        if red.pivots.iter().any(|(c, _)| *c >= n) {
            return Ok(None);
        }
        let mut x = ExactMatrix::zeros(n, b.cols);
        for (c, row) in &red.pivots {
            for j in 0..b.cols {
                x.set(*c, j, row[n + j].clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("inverse of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut red = RowReducer::new(2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            red.push(row);
        }
        let rank = red.pivots.iter().filter(|(c, _)| *c < n).count();
        if rank < n {
            return Err(Error::Singular { rank, size: n });
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for (c, row) in &red.pivots {
            for j in 0..n {
                inv.set(*c, j, row[n + j].clone());
            }
        }
        Ok(inv)
    }
}

/// Incremental Gauss-Jordan elimination.
///
/// Rows are fed one at a time; the stored pivot rows are kept in reduced row
/// echelon form, with pivot entry 1. Rows that reduce to zero are dropped, so
/// memory is proportional to the rank.
#[derive(Clone, Debug)]
pub struct RowReducer {
    width: usize,
    /// `(pivot column, row)` pairs, unsorted.
    pivots: Vec<(usize, Vec<Scalar>)>,
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer { width, pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots without storing it.
    pub fn reduce(&self, mut row: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(row.len(), self.width, "row width");
        for (c, prow) in &self.pivots {
            if row[*c].is_zero() {
                continue;
            }
            let f = row[*c].clone();
            for (x, p) in row.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        row
    }

    /// True iff `row` lies in the span of the rows pushed so far.
    pub fn contains(&self, row: Vec<Scalar>) -> bool {
        self.reduce(row).iter().all(Scalar::is_zero)
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn push(&mut self, row: Vec<Scalar>) -> bool {
        let mut row = self.reduce(row);
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[c].inv().expect("nonzero pivot");
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, prow) in self.pivots.iter_mut() {
            if prow[c].is_zero() {
                continue;
            }
            let f = prow[c].clone();
            for (x, p) in prow.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        self.pivots.push((c, row));
        true
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivots.iter().map(|(c, _)| *c).collect();
        cols.sort_unstable();
        cols
    }

    /// Kernel basis of the matrix whose rows were pushed, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let pivot_of: std::collections::HashMap<usize, &Vec<Scalar>> =
            self.pivots.iter().map(|(c, r)| (*c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.width {
            if pivot_of.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.width];
            v[free] = Scalar::one();
            for (c, row) in &self.pivots {
                if !row[free].is_zero() {
                    v[*c] = -&row[free];
                }
            }
            basis.push(v);
        }
        basis
    }

    /// The stored rows sorted by pivot column (the RREF of the pushed rows).
    pub fn rref_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows: Vec<_> = self.pivots.clone();
        rows.sort_by_key(|(c, _)| *c);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3(k: i64) -> Scalar {
        Scalar::zeta_pow(3, k)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(5).rank(), 5);
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        let m = ExactMatrix::from_rows(vec![vec![Scalar::one(), z3(1)], vec![z3(2), Scalar::one()]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inverse_examples() {
        let id = ExactMatrix::identity(3);
        assert_eq!(id.inverse().unwrap(), id);
        let swap = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
        let ones = ExactMatrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(ones.inverse(), Err(Error::Singular { rank: 1, size: 2 }));
    }

    #[test]
    fn kernel_spans_nullspace() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.len() + m.rank(), 4);
        for v in &k {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = ExactMatrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let b = ExactMatrix::from_int_rows(&[&[3], &[1]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(&a * &x, b);
        let sing = ExactMatrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&b).unwrap().is_none());
    }

    #[test]
    fn kron_mixed_product() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2], &[0, 1]]);
        let b = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 3]]);
        let lhs = &a.kron(&b) * &b.kron(&a);
        let rhs = (&a * &b).kron(&(&b * &a));
        assert_eq!(lhs, rhs);
    }
}
