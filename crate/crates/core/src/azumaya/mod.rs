//! Associative algebras over a field and the two equivalent invertibility
//! tests for them: the sandwich map `A⊗A^op -> End(A)` being bijective, and
//! `A` being central and separable.

use serde::{Deserialize, Serialize};

use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::exact::{Accumulator, CycloScalar, ExactMatrix, RowReducer, SparseVec};
use crate::group::FiniteGroup;

type Scalar = CycloScalar;

/// Structure constants of an associative unital algebra.
///
/// `products[i * dim + j]` is `e_i e_j`. Elements of `A⊗A` use the index
/// `i * dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    dim: usize,
    field: u32,
    products: Vec<SparseVec>,
    unit: SparseVec,
}

/// Raw tensors as they appear in an algebra file.
#[derive(Clone, Debug, Default)]
pub struct AlgebraTensors {
    pub dim: usize,
    pub field: u32,
    /// `(i, j, k, c)`: coefficient of `e_k` in `e_i e_j`.
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub unit: Vec<(usize, Scalar)>,
}

impl AlgebraPresentation {
    pub fn from_tensors(t: AlgebraTensors) -> Result<Self> {
        let d = t.dim;
        if d == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        let check = |name: &str, x: usize| {
            if x >= d {
                Err(Error::DimensionMismatch(format!("{name} index {x} out of range for dim {d}")))
            } else {
                Ok(())
            }
        };
        let mut prod: Vec<Accumulator> = (0..d * d).map(|_| Accumulator::new()).collect();
        for (i, j, k, c) in t.mult {
            for x in [i, j, k] {
                check("mult", x)?;
            }
            prod[i * d + j].add(k, c);
        }
        let mut unit = Accumulator::new();
        for (k, c) in t.unit {
            check("unit", k)?;
            unit.add(k, c);
        }
        let products = prod.into_iter().map(Accumulator::finish).collect();
        Self::from_products(t.field, products, unit.finish())
    }

    pub fn to_tensors(&self) -> AlgebraTensors {
        let d = self.dim;
        let mut t = AlgebraTensors { dim: d, field: self.field, ..Default::default() };
        for (ij, v) in self.products.iter().enumerate() {
            for (k, c) in v.iter() {
                t.mult.push((ij / d, ij % d, *k, c.clone()));
            }
        }
        t.unit = self.unit.iter().cloned().collect();
        t
    }

    /// Validates associativity and unitality.
    pub fn from_products(field: u32, products: Vec<SparseVec>, unit: SparseVec) -> Result<Self> {
        if field == 0 {
            return Err(Error::MalformedConductor);
        }
        let dim = (0..=products.len()).find(|d| d * d >= products.len()).unwrap_or(0);
        if dim == 0 || dim * dim != products.len() {
            return Err(Error::DimensionMismatch(format!("{} products is not a square", products.len())));
        }
        let a = AlgebraPresentation { dim, field, products, unit };
        if let Some(f) = verify_algebra(&a).first_failure() {
            return Err(Error::Validation(f.name.clone()));
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(self.product_of_basis(*i, *j), &(x * y));
            }
        }
        acc.finish()
    }

    /// `M_n`, basis `E_ij` at index `i * n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let mut products = vec![SparseVec::new(); d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    products[(i * n + j) * d + j * n + l] = SparseVec::basis(i * n + l);
                }
            }
        }
        let unit = SparseVec::from_dense(
            &(0..d).map(|k| if k / n == k % n { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>(),
        );
        AlgebraPresentation { dim: d, field: 1, products, unit }
    }

    /// `Q^n` with its orthogonal idempotents as basis.
    pub fn split(n: usize) -> Self {
        let mut products = vec![SparseVec::new(); n * n];
        for i in 0..n {
            products[i * n + i] = SparseVec::basis(i);
        }
        let unit = SparseVec::from_dense(&vec![Scalar::one(); n]);
        AlgebraPresentation { dim: n, field: 1, products, unit }
    }

    /// `Q[x]/(f)` for monic `f = x^n + c[n-1] x^{n-1} + … + c[0]`, basis `1, x, …, x^{n-1}`.
    pub fn monogenic(c: &[Scalar]) -> Result<Self> {
        let n = c.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("polynomial of degree 0".into()));
        }
        // powers[m] = x^m reduced, for m < 2n - 1
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = vec![Scalar::zero(); n];
        cur[0] = Scalar::one();
        for _ in 0..2 * n - 1 {
            powers.push(cur.clone());
            let top = cur[n - 1].clone();
            let mut next = vec![Scalar::zero(); n];
            for k in (1..n).rev() {
                next[k] = cur[k - 1].clone();
            }
            for k in 0..n {
                next[k] -= &(&top * &c[k]);
            }
            cur = next;
        }
        let products =
            (0..n * n).map(|ij| SparseVec::from_dense(&powers[ij / n + ij % n])).collect();
        let field = c.iter().map(Scalar::conductor).fold(1, lcm);
        Self::from_products(field, products, SparseVec::basis(0))
    }

    pub fn group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        let products = (0..n * n).map(|ij| SparseVec::basis(g.mul(ij / n, ij % n))).collect();
        AlgebraPresentation { dim: n, field: 1, products, unit: SparseVec::basis(g.identity()) }
    }

    /// `A × B`, basis of `A` first.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let shift = |v: &SparseVec, s: usize| SparseVec::from_dense(&{
            let mut out = vec![Scalar::zero(); d];
            for (k, c) in v.iter() {
                out[k + s] = c.clone();
            }
            out
        });
        let mut products = vec![SparseVec::new(); d * d];
        for i in 0..d1 {
            for j in 0..d1 {
                products[i * d + j] = shift(self.product_of_basis(i, j), 0);
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                products[(d1 + i) * d + d1 + j] = shift(other.product_of_basis(i, j), d1);
            }
        }
        let mut unit = shift(&self.unit, 0).to_dense(d);
        for (k, c) in other.unit.iter() {
            unit[d1 + k] = c.clone();
        }
        AlgebraPresentation {
            dim: d,
            field: lcm(self.field, other.field),
            products,
            unit: SparseVec::from_dense(&unit),
        }
    }

    /// `A⊗B`, basis `a_i⊗b_j` at index `i * dim(B) + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 * d2;
        let mut products = Vec::with_capacity(d * d);
        for ij in 0..d {
            for kl in 0..d {
                let a = self.product_of_basis(ij / d2, kl / d2);
                let b = other.product_of_basis(ij % d2, kl % d2);
                products.push(a.kron(b, d2));
            }
        }
        AlgebraPresentation {
            dim: d,
            field: lcm(self.field, other.field),
            products,
            unit: self.unit.kron(&other.unit, d2),
        }
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &ExactMatrix) -> Result<Self> {
        let d = self.dim;
        if p.rows() != d || p.cols() != d {
            return Err(Error::ShapeMismatch(format!("basis change must be {d}x{d}")));
        }
        let pinv = p.inverse()?;
        let cols: Vec<SparseVec> = (0..d).map(|j| SparseVec::from_dense(&p.column(j))).collect();
        let back = |v: &SparseVec| SparseVec::from_dense(&pinv.apply(&v.to_dense(d)));
        let products = (0..d * d).map(|ij| back(&self.mul(&cols[ij / d], &cols[ij % d]))).collect();
        let unit = back(&self.unit);
        Self::from_products(self.field, products, unit)
    }

    /// `d×d` matrix of `x ↦ a x`.
    pub fn left_mult_matrix(&self, a: &SparseVec) -> ExactMatrix {
        let d = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(a, &SparseVec::basis(j)).to_dense(d)).collect();
        ExactMatrix::from_columns(d, &cols)
    }

    /// `d×d` matrix of `x ↦ x a`.
    pub fn right_mult_matrix(&self, a: &SparseVec) -> ExactMatrix {
        let d = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(&SparseVec::basis(j), a).to_dense(d)).collect();
        ExactMatrix::from_columns(d, &cols)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    let g = num_integer::gcd(a, b);
    a / g * b
}

/// Associativity on basis triples, and the unit on both sides.
pub fn verify_algebra(a: &AlgebraPresentation) -> AxiomReport {
    let d = a.dim;
    let mut report = AxiomReport::new();
    let mut witness = None;
    'outer: for i in 0..d {
        for j in 0..d {
            let ij = a.product_of_basis(i, j);
            for k in 0..d {
                let left = a.mul(ij, &SparseVec::basis(k));
                let right = a.mul(&SparseVec::basis(i), a.product_of_basis(j, k));
                if left != right {
                    witness = Some(vec![i, j, k]);
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", witness);
    let unit_fails = |left: bool| {
        (0..d)
            .find(|&i| {
                let e = SparseVec::basis(i);
                let p = if left { a.mul(&a.unit, &e) } else { a.mul(&e, &a.unit) };
                p != e
            })
            .map(|i| vec![i])
    };
    report.record("left unit", unit_fails(true));
    report.record("right unit", unit_fails(false));
    report
}

/// Basis of `{z : z a = a z for all a}`.
pub fn center_of_algebra(a: &AlgebraPresentation) -> Vec<SparseVec> {
    let d = a.dim;
    let mut red = RowReducer::new(d);
    for k in 0..d {
        let e = SparseVec::basis(k);
        let comm = &a.right_mult_matrix(&e) - &a.left_mult_matrix(&e);
        for r in 0..d {
            red.push(comm.row(r).to_vec());
        }
        if red.rank() == d {
            break;
        }
    }
    red.kernel().iter().map(|v| SparseVec::from_dense(v)).collect()
}

/// The matrix of `a⊗b ↦ (x ↦ a x b)` from `A⊗A^op` to `End(A)`.
///
/// Column `a * d + b`; row `i * d + x` is the coefficient of `e_i` in `e_a e_x e_b`.
pub fn sandwich_map(a: &AlgebraPresentation) -> ExactMatrix {
    let d = a.dim;
    let mut m = ExactMatrix::zeros(d * d, d * d);
    for p in 0..d {
        for x in 0..d {
            let px = a.product_of_basis(p, x);
            for q in 0..d {
                let v = a.mul(px, &SparseVec::basis(q));
                for (i, c) in v.iter() {
                    m.set(i * d + x, p * d + q, c.clone());
                }
            }
        }
    }
    m
}

/// A separability idempotent: `e ∈ A⊗A` with `m(e) = 1` and `(a⊗1)e = e(1⊗a)`.
pub fn separability_idempotent(a: &AlgebraPresentation) -> Option<SparseVec> {
    let d = a.dim;
    let n = d * d;
    let mut red = RowReducer::new(n + 1);
    let feasible = |red: &RowReducer| red.pivot_columns().last() != Some(&n);

    // m(e) = 1
    let unit = a.unit.to_dense(d);
    let mut rows = vec![vec![Scalar::zero(); n + 1]; d];
    for ij in 0..n {
        for (k, c) in a.product_of_basis(ij / d, ij % d).iter() {
            rows[*k][ij] = c.clone();
        }
    }
    for (k, mut row) in rows.into_iter().enumerate() {
        row[n] = unit[k].clone();
        red.push(row);
    }
    // (e_k⊗1)e - e(1⊗e_k) = 0, coordinates p*d+q
    for k in 0..d {
        let mut rows = vec![vec![Scalar::zero(); n + 1]; n];
        for i in 0..d {
            for j in 0..d {
                for (p, c) in a.product_of_basis(k, i).iter() {
                    rows[p * d + j][i * d + j] += c;
                }
                for (q, c) in a.product_of_basis(j, k).iter() {
                    rows[i * d + q][i * d + j] -= c;
                }
            }
        }
        for row in rows {
            red.push(row);
        }
        if !feasible(&red) {
            return None;
        }
    }
    if !feasible(&red) {
        return None;
    }
    let mut e = vec![Scalar::zero(); n];
    for row in red.rref_rows() {
        let c = row.iter().position(|x| !x.is_zero()).expect("pivot row");
        e[c] = row[n].clone();
    }
    Some(SparseVec::from_dense(&e))
}

/// Both invertibility routes, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AzumayaReport {
    pub dim: usize,
    pub center_dim: usize,
    pub sandwich_rank: usize,
    pub central: bool,
    pub separable: bool,
    pub sandwich_iso: bool,
    /// Over a field every nonzero module is faithful and projective.
    pub faithful_projective: bool,
    pub verdict: bool,
    pub route_agreement: bool,
}

pub fn is_azumaya(a: &AlgebraPresentation) -> Result<AzumayaReport> {
    let d = a.dim;
    let center_dim = center_of_algebra(a).len();
    let central = center_dim == 1;
    let separable = separability_idempotent(a).is_some();
    let sandwich_rank = sandwich_map(a).rank();
    let sandwich_iso = sandwich_rank == d * d;
    let faithful_projective = d >= 1;
    let azumaya = sandwich_iso && faithful_projective;
    let central_separable = central && separable;
    if azumaya != central_separable {
        return Err(Error::InternalInconsistency(format!(
            "sandwich route says {azumaya}, central-separable route says {central_separable} (dim {d})"
        )));
    }
    Ok(AzumayaReport {
        dim: d,
        center_dim,
        sandwich_rank,
        central,
        separable,
        sandwich_iso,
        faithful_projective,
        verdict: azumaya,
        route_agreement: true,
    })
}
