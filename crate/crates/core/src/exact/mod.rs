//! Exact arithmetic: rationals, cyclotomic scalars, dense and sparse matrices.
//!
//! Everything downstream computes over `Q(zeta_n)` with no floating point.
//! Equality is exact; scalars of different conductors compare after embedding
//! both into the field of the least common multiple.

mod cyclo;
mod matrix;
mod rational;
mod sparse;

pub use cyclo::{euler_phi, CycloScalar};
pub use matrix::{ExactMatrix, RowReducer};
pub use rational::Rational;
pub use sparse::{Accumulator, SparseMatrix, SparseVec};

use crate::error::Result;

/// Canonical representative of `sum_k raw[k] zeta_n^k`.
pub fn cyclo_reduce(n: u32, raw: &[Rational]) -> Result<CycloScalar> {
    CycloScalar::reduce(n, raw)
}

pub fn mat_rank(m: &ExactMatrix) -> usize {
    m.rank()
}

pub fn mat_inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    m.inverse()
}
