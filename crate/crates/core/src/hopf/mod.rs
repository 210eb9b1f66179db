//! Finite-dimensional Hopf algebras by structure constants, their
//! quasitriangular structures, and the closed-form Drinfeld map.
//!
//! Conventions: `H*` always carries the basis dual to the declared basis of
//! `H`. The Drinfeld map sends `f ∈ H*` to `(f⊗id)(R₂₁R) ∈ H`, so its matrix
//! has column `j` equal to `(e^j⊗id)(R₂₁R)`.

mod double;
mod examples;
mod presentation;
mod verify;

pub use double::drinfeld_double;
pub use examples::{build_example, dual_group_algebra, group_algebra, sweedler, uq_sl2, ExampleName};
pub use presentation::{HopfPresentation, HopfTensors};
pub use verify::{verify_hopf, verify_quasitriangular};


use serde::Serialize;

use crate::exact::{Accumulator, CycloScalar, ExactMatrix, SparseVec};
use crate::error::{Error, Result};

type Scalar = CycloScalar;

/// An element `R = Σ R[i][j] e_i⊗e_j` of `H⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    dim: usize,
    element: SparseVec,
}

impl RMatrix {
    pub fn from_element(dim: usize, element: SparseVec) -> Self {
        RMatrix { dim, element }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut acc = Accumulator::new();
        for (i, j, c) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch(format!("rmatrix index ({i},{j}) out of range")));
            }
            acc.add(i * dim + j, c.clone());
        }
        Ok(RMatrix { dim, element: acc.finish() })
    }

    /// `1⊗1`.
    pub fn trivial(p: &HopfPresentation) -> Self {
        RMatrix { dim: p.dim(), element: p.unit_tensor(2) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element(&self) -> &SparseVec {
        &self.element
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        self.element.iter().map(|(k, c)| (k / self.dim, k % self.dim, c.clone())).collect()
    }

    /// `R₂₁`.
    pub fn flipped(&self) -> RMatrix {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (k, c) in self.element.iter() {
            acc.add((k % d) * d + k / d, c.clone());
        }
        RMatrix { dim: d, element: acc.finish() }
    }

    /// `R⁻¹ = (S⊗id)(R)`, valid for any quasitriangular structure.
    pub fn inverse(&self, p: &HopfPresentation) -> SparseVec {
        p.map_at(2, 0, &self.element, |k| p.antipode_of_basis(k).clone())
    }
}

/// The monodromy element `R₂₁R ∈ H⊗H`.
pub fn monodromy_element(p: &HopfPresentation, r: &RMatrix) -> SparseVec {
    p.mul_tensor(2, r.flipped().element(), r.element())
}

/// Closed-form Drinfeld map `H* -> H`, `f ↦ (f⊗id)(R₂₁R)`.
pub fn drinfeld_map_closed(p: &HopfPresentation, r: &RMatrix) -> ExactMatrix {
    let d = p.dim();
    let q = monodromy_element(p, r);
    let mut m = ExactMatrix::zeros(d, d);
    for (k, c) in q.iter() {
        let (j, b) = (k / d, k % d);
        *m.get_mut(b, j) += c;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorizability {
    pub factorizable: bool,
    pub rank: usize,
}

/// Factorizable iff the Drinfeld map has full rank; the rank is the certificate.
pub fn is_factorizable(p: &HopfPresentation, r: &RMatrix) -> Factorizability {
    let rank = drinfeld_map_closed(p, r).rank();
    Factorizability { factorizable: rank == p.dim(), rank }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrals {
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
    pub unimodular: bool,
}

/// Left and right integrals, each a one-dimensional space.
pub fn integrals(p: &HopfPresentation) -> Result<Integrals> {
    let d = p.dim();
    let gens = p.algebra_generators();
    let solve = |left: bool| -> Result<Vec<Scalar>> {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for &g in &gens {
            let e = SparseVec::basis(g);
            let m = if left { p.left_mult_matrix(&e) } else { p.right_mult_matrix(&e) };
            let shifted = &m - &ExactMatrix::identity(d).scale(&p.counit_vector()[g]);
            for i in 0..d {
                rows.push(shifted.row(i).to_vec());
            }
        }
        let sys = if rows.is_empty() { ExactMatrix::zeros(0, d) } else { ExactMatrix::from_rows(rows)? };
        let ker = sys.kernel();
        if ker.len() != 1 {
            return Err(Error::InternalInconsistency(format!(
                "{} integral space has dimension {}",
                if left { "left" } else { "right" },
                ker.len()
            )));
        }
        Ok(ker.into_iter().next().expect("one vector"))
    };
    let left = solve(true)?;
    let right = solve(false)?;
    let both = ExactMatrix::from_columns(d, &[left.clone(), right.clone()]);
    let unimodular = both.rank() == 1;
    Ok(Integrals { left, right, unimodular })
}

/// Adjoint action `h ↦ (k ↦ h₁ k S(h₂))` on `H`, as matrices for each basis `h`.
pub fn adjoint_action(p: &HopfPresentation) -> Vec<ExactMatrix> {
    let d = p.dim();
    (0..d)
        .map(|h| {
            let delta = p.coproduct_of_basis(h);
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|k| {
                    let mut acc = Accumulator::new();
                    for (idx, c) in delta.iter() {
                        let (a, b) = (idx / d, idx % d);
                        let v = p.mul(&p.mul(&SparseVec::basis(a), &SparseVec::basis(k)), p.antipode_of_basis(b));
                        acc.add_vec(&v, c);
                    }
                    acc.finish().to_dense(d)
                })
                .collect();
            ExactMatrix::from_columns(d, &cols)
        })
        .collect()
}

/// Coadjoint action `(h·φ)(k) = φ(S(h₁) k h₂)` on `H*`, in the dual basis.
pub fn coadjoint_action(p: &HopfPresentation) -> Vec<ExactMatrix> {
    let d = p.dim();
    (0..d)
        .map(|h| {
            let delta = p.coproduct_of_basis(h);
            // entry (a, b): coefficient of e^a in h·e^b = e^b(S(h1) e_a h2)
            let mut m = ExactMatrix::zeros(d, d);
            for a in 0..d {
                let mut acc = Accumulator::new();
                for (idx, c) in delta.iter() {
                    let (x, y) = (idx / d, idx % d);
                    let v = p.mul(&p.mul(p.antipode_of_basis(x), &SparseVec::basis(a)), &SparseVec::basis(y));
                    acc.add_vec(&v, c);
                }
                for (b, c) in acc.finish().iter() {
                    m.set(a, *b, c.clone());
                }
            }
            m
        })
        .collect()
}
