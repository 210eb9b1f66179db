//! Finite-dimensional modules over a Hopf presentation: tensor products, left
//! duals, evaluation and coevaluation, the braiding from an R-matrix, and
//! spaces of intertwiners.
//!
//! Bases of `X⊗Y` are ordered with the index of `X` major. The dual `X^∨`
//! carries the dual basis and the action `(h·f)(v) = f(S(h)·v)`.

use std::sync::Arc;

use crate::exact::{Accumulator, CycloScalar, ExactMatrix, RowReducer, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, RMatrix};

type Scalar = CycloScalar;

/// A representation `ρ: H -> End(V)`, stored as one matrix per basis element of `H`.
#[derive(Clone, Debug)]
pub struct HModule {
    parent: Arc<HopfPresentation>,
    dim: usize,
    action: Vec<SparseMatrix>,
}

impl HModule {
    /// `action[h]` is the `dim × dim` matrix of `e_h`.
    pub fn new(parent: Arc<HopfPresentation>, dim: usize, action: Vec<ExactMatrix>) -> Result<Self> {
        let sparse = action.iter().map(SparseMatrix::from_dense).collect();
        Self::from_sparse(parent, dim, sparse)
    }

    pub fn from_sparse(parent: Arc<HopfPresentation>, dim: usize, action: Vec<SparseMatrix>) -> Result<Self> {
        if action.len() != parent.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a Hopf algebra of dimension {}",
                action.len(),
                parent.dim()
            )));
        }
        if let Some(h) = action.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action of e_{h} is not {dim}×{dim}")));
        }
        Ok(HModule { parent, dim, action })
    }

    pub fn parent(&self) -> &Arc<HopfPresentation> {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, h: usize) -> &SparseMatrix {
        &self.action[h]
    }

    pub fn action_matrix(&self, h: usize) -> ExactMatrix {
        self.action[h].to_dense()
    }

    /// The matrix of an arbitrary element of `H`.
    pub fn element_matrix(&self, h: &SparseVec) -> SparseMatrix {
        SparseMatrix::linear_combination(self.dim, self.dim, h.iter().map(|(i, c)| (&self.action[*i], c.clone())))
    }

    pub fn act(&self, h: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in h.iter() {
            acc.add_vec(&self.action[*i].apply(v), c);
        }
        acc.finish()
    }

    fn same_parent(&self, other: &HModule) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }
}

/// `H` acting through the counit on a one-dimensional space.
pub fn trivial_module(p: &Arc<HopfPresentation>) -> HModule {
    let action = p
        .counit_vector()
        .iter()
        .map(|e| SparseMatrix::from_columns(1, vec![SparseVec::basis(0).scale(e)]))
        .collect();
    HModule { parent: p.clone(), dim: 1, action }
}

/// `H` acting on itself by left multiplication.
pub fn regular_module(p: &Arc<HopfPresentation>) -> HModule {
    let d = p.dim();
    let action = (0..d)
        .map(|h| SparseMatrix::from_columns(d, (0..d).map(|j| p.product_of_basis(h, j).clone()).collect()))
        .collect();
    HModule { parent: p.clone(), dim: d, action }
}

/// Extends matrices given on algebra generators to a module over all of `H`.
///
/// Products of known elements with generators are explored until they span
/// `H`; every basis element is then solved for in that spanning set. The
/// result is checked with [`verify_module`], so inconsistent generator
/// matrices are rejected with `Validation`.
pub fn module_from_generators(
    parent: &Arc<HopfPresentation>,
    dim: usize,
    generators: &[(usize, ExactMatrix)],
) -> Result<HModule> {
    let d = parent.dim();
    for (g, m) in generators {
        if *g >= d || m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch(format!("generator e_{g} needs a {dim}×{dim} matrix")));
        }
    }
    // known elements of H with their images
    let mut known: Vec<(SparseVec, SparseMatrix)> = vec![(parent.unit().clone(), SparseMatrix::identity(dim))];
    let mut red = RowReducer::new(d);
    red.push(parent.unit().to_dense(d));
    let mut next = 0;
    while next < known.len() && red.rank() < d {
        let (h, rho) = known[next].clone();
        next += 1;
        for (g, mg) in generators {
            let gh = parent.mul(&SparseVec::basis(*g), &h);
            if red.push(gh.to_dense(d)) {
                known.push((gh, SparseMatrix::from_dense(mg).compose(&rho)));
            }
        }
    }
    if red.rank() < d {
        return Err(Error::Validation(format!(
            "the given generators span a subalgebra of dimension {} < {d}",
            red.rank()
        )));
    }
    // express each basis element in the spanning set: columns are the known elements
    let span = ExactMatrix::from_columns(d, &known.iter().map(|(h, _)| h.to_dense(d)).collect::<Vec<_>>());
    let coeffs = span.solve(&ExactMatrix::identity(d))?.expect("the known elements span H");
    let action = (0..d)
        .map(|j| {
            let terms = known.iter().enumerate().map(|(k, (_, rho))| (rho, coeffs.get(k, j).clone()));
            SparseMatrix::linear_combination(dim, dim, terms)
        })
        .collect();
    let m = HModule { parent: parent.clone(), dim, action };
    if !verify_module(&m) {
        return Err(Error::Validation("module relations".into()));
    }
    Ok(m)
}

/// `X ⊕ Y`, with the basis of `X` first.
pub fn direct_sum(x: &HModule, y: &HModule) -> Result<HModule> {
    x.same_parent(y)?;
    let (m, n) = (x.dim, y.dim);
    let action = x
        .action
        .iter()
        .zip(&y.action)
        .map(|(a, b)| {
            let mut cols: Vec<SparseVec> = (0..m).map(|j| a.column(j).clone()).collect();
            for j in 0..n {
                let mut acc = Accumulator::new();
                for (i, c) in b.column(j).iter() {
                    acc.add(i + m, c.clone());
                }
                cols.push(acc.finish());
            }
            SparseMatrix::from_columns(m + n, cols)
        })
        .collect();
    Ok(HModule { parent: x.parent.clone(), dim: m + n, action })
}

/// The submodule `H·v` of the regular module, in a basis produced by spinning `v`.
pub fn cyclic_submodule(p: &Arc<HopfPresentation>, v: &SparseVec) -> Result<HModule> {
    let d = p.dim();
    let gens = p.algebra_generators();
    let mut red = RowReducer::new(d);
    let mut basis = Vec::new();
    if red.push(v.to_dense(d)) {
        basis.push(v.clone());
    }
    let mut next = 0;
    while next < basis.len() {
        let w = basis[next].clone();
        next += 1;
        for &g in &gens {
            let gw = p.mul(&SparseVec::basis(g), &w);
            if red.push(gw.to_dense(d)) {
                basis.push(gw);
            }
        }
    }
    let k = basis.len();
    let b = ExactMatrix::from_columns(d, &basis.iter().map(|w| w.to_dense(d)).collect::<Vec<_>>());
    let action = (0..d)
        .map(|h| {
            let image = &p.left_mult_matrix(&SparseVec::basis(h)) * &b;
            let x = b.solve(&image)?.ok_or_else(|| Error::InternalInconsistency("spun space is not stable".into()))?;
            Ok(SparseMatrix::from_dense(&x))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HModule { parent: p.clone(), dim: k, action })
}

/// Candidate values of a character on `e_g`, read off from the left
/// multiplication matrix `L`: roots of unity if `L` has finite order,
/// `0` if nilpotent, `{0, 1}` if idempotent.
fn character_values(l: &ExactMatrix, d: usize) -> Vec<Scalar> {
    let mut power = l.clone();
    for k in 1..=d {
        if power.is_identity() {
            return (0..k as i64).map(|j| Scalar::zeta_pow(k as u32, j)).collect();
        }
        if power.is_zero() {
            return vec![Scalar::zero()];
        }
        power = &power * l;
    }
    if &(l * l) == l {
        return vec![Scalar::zero(), Scalar::one()];
    }
    std::iter::once(Scalar::zero()).chain((0..d as i64).map(|j| Scalar::zeta_pow(d as u32, j))).collect()
}

/// All one-dimensional modules whose values on algebra generators are roots
/// of unity, `0` or `1` as detected by [`character_values`].
///
/// A character `χ` is found through a vector `Λ ≠ 0` with `gΛ = χ(g)Λ` for
/// every generator `g`; such a `Λ` exists in the regular module for every
/// character of a finite-dimensional Hopf algebra.
pub fn characters(p: &Arc<HopfPresentation>) -> Result<Vec<HModule>> {
    let d = p.dim();
    let gens = p.algebra_generators();
    let mats: Vec<ExactMatrix> = gens.iter().map(|&g| p.left_mult_matrix(&SparseVec::basis(g))).collect();
    let options: Vec<Vec<Scalar>> = mats
        .iter()
        .map(|l| {
            character_values(l, d)
                .into_iter()
                .filter(|c| (l - &ExactMatrix::identity(d).scale(c)).rank() < d)
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut stack: Vec<(Vec<Scalar>, Vec<Vec<Scalar>>)> = vec![(Vec::new(), Vec::new())];
    while let Some((values, rows)) = stack.pop() {
        let k = values.len();
        if k == gens.len() {
            let generators: Vec<(usize, ExactMatrix)> = gens
                .iter()
                .zip(&values)
                .map(|(&g, c)| (g, ExactMatrix::from_rows(vec![vec![c.clone()]]).expect("1×1")))
                .collect();
            found.push(module_from_generators(p, 1, &generators)?);
            continue;
        }
        for c in options[k].iter().rev() {
            let shifted = &mats[k] - &ExactMatrix::identity(d).scale(c);
            let mut rows2 = rows.clone();
            rows2.extend((0..d).map(|i| shifted.row(i).to_vec()));
            let sys = ExactMatrix::from_rows(rows2.clone())?;
            if !sys.kernel().is_empty() {
                let mut v = values.clone();
                v.push(c.clone());
                stack.push((v, rows2));
            }
        }
    }
    Ok(found)
}

/// A sample of small modules: all [`characters`], the trivial module summed
/// with each character, and every two-dimensional `H·e_i`.
pub fn small_modules(p: &Arc<HopfPresentation>) -> Result<Vec<HModule>> {
    let chars = characters(p)?;
    let triv = trivial_module(p);
    let mut out = chars.clone();
    for c in &chars {
        out.push(direct_sum(&triv, c)?);
    }
    for i in 0..p.dim() {
        let m = cyclic_submodule(p, &SparseVec::basis(i))?;
        if m.dim == 2 {
            out.push(m);
        }
    }
    Ok(out)
}

/// Checks `ρ(1) = id` and `ρ(g)ρ(e_j) = ρ(g·e_j)` for algebra generators `g`
/// and all `j`, which together force `ρ` to be multiplicative.
pub fn verify_module(x: &HModule) -> bool {
    let p = &x.parent;
    if !x.element_matrix(p.unit()).is_identity() {
        return false;
    }
    let gens = p.algebra_generators();
    gens.iter().all(|&g| {
        (0..p.dim()).all(|j| x.action[g].compose(&x.action[j]) == x.element_matrix(p.product_of_basis(g, j)))
    })
}

/// Matrix of `Σ c a⊗b` acting on `X⊗Y`, for `t = Σ c e_a⊗e_b ∈ H⊗H`.
fn act_on_tensor(t: &SparseVec, x: &HModule, y: &HModule) -> SparseMatrix {
    let d = x.parent.dim();
    let (m, n) = (x.dim, y.dim);
    let mut cols: Vec<Accumulator> = (0..m * n).map(|_| Accumulator::new()).collect();
    for (ab, c) in t.iter() {
        let (ra, rb) = (&x.action[ab / d], &y.action[ab % d]);
        for a in 0..m {
            let ca = ra.column(a);
            if ca.is_empty() {
                continue;
            }
            for b in 0..n {
                cols[a * n + b].add_vec(&ca.kron(rb.column(b), n), c);
            }
        }
    }
    SparseMatrix::from_columns(m * n, cols.into_iter().map(Accumulator::finish).collect())
}

/// `X⊗Y` with `h` acting by `(ρ_X⊗ρ_Y)(Δh)`.
pub fn tensor_module(x: &HModule, y: &HModule) -> Result<HModule> {
    x.same_parent(y)?;
    let p = &x.parent;
    let action = (0..p.dim()).map(|h| act_on_tensor(p.coproduct_of_basis(h), x, y)).collect();
    Ok(HModule { parent: p.clone(), dim: x.dim * y.dim, action })
}

/// The left dual `X^∨`: `e_h` acts by `ρ(S(e_h))ᵀ`.
pub fn dual_module(x: &HModule) -> HModule {
    let p = &x.parent;
    let action = (0..p.dim()).map(|h| x.element_matrix(p.antipode_of_basis(h)).transpose()).collect();
    HModule { parent: p.clone(), dim: x.dim, action }
}

/// `ev: X^∨⊗X -> 1`, `f⊗v ↦ f(v)`.
pub fn ev(x: &HModule) -> SparseMatrix {
    let m = x.dim;
    let cols = (0..m * m).map(|k| if k / m == k % m { SparseVec::basis(0) } else { SparseVec::new() }).collect();
    SparseMatrix::from_columns(1, cols)
}

/// `coev: 1 -> X⊗X^∨`, `1 ↦ Σ v_c⊗v^c`.
pub fn coev(x: &HModule) -> SparseMatrix {
    let m = x.dim;
    let mut acc = Accumulator::new();
    for c in 0..m {
        acc.add(c * m + c, Scalar::one());
    }
    SparseMatrix::from_columns(m * m, vec![acc.finish()])
}

/// `σ_{X,Y}: X⊗Y -> Y⊗X`, `x⊗y ↦ Σ t_i·y ⊗ s_i·x` for `R = Σ s_i⊗t_i`.
pub fn braiding_sparse(x: &HModule, y: &HModule, r: &RMatrix) -> Result<SparseMatrix> {
    x.same_parent(y)?;
    Ok(swap_then_act(r.element(), x, y))
}

/// `σ_{Y,X}⁻¹: X⊗Y -> Y⊗X`, `x⊗y ↦ Σ s̄_i·y ⊗ t̄_i·x` for `R⁻¹ = Σ s̄_i⊗t̄_i`.
pub fn braiding_inverse_sparse(x: &HModule, y: &HModule, r: &RMatrix) -> Result<SparseMatrix> {
    x.same_parent(y)?;
    let inv = RMatrix::from_element(r.dim(), r.inverse(&x.parent)).flipped();
    Ok(swap_then_act(inv.element(), x, y))
}

/// `x⊗y ↦ Σ c (b·y)⊗(a·x)` for `t = Σ c e_a⊗e_b`.
fn swap_then_act(t: &SparseVec, x: &HModule, y: &HModule) -> SparseMatrix {
    let d = x.parent.dim();
    let (m, n) = (x.dim, y.dim);
    let mut cols: Vec<Accumulator> = (0..m * n).map(|_| Accumulator::new()).collect();
    for (ab, c) in t.iter() {
        let (ra, rb) = (&x.action[ab / d], &y.action[ab % d]);
        for a in 0..m {
            let ca = ra.column(a);
            if ca.is_empty() {
                continue;
            }
            for b in 0..n {
                cols[a * n + b].add_vec(&rb.column(b).kron(ca, m), c);
            }
        }
    }
    SparseMatrix::from_columns(m * n, cols.into_iter().map(Accumulator::finish).collect())
}

pub fn braiding(x: &HModule, y: &HModule, r: &RMatrix) -> Result<ExactMatrix> {
    Ok(braiding_sparse(x, y, r)?.to_dense())
}

pub fn braiding_inverse(x: &HModule, y: &HModule, r: &RMatrix) -> Result<ExactMatrix> {
    Ok(braiding_inverse_sparse(x, y, r)?.to_dense())
}

/// Whether `t: X -> Y` commutes with the action of every algebra generator.
pub fn is_intertwiner(x: &HModule, y: &HModule, t: &SparseMatrix) -> Result<bool> {
    x.same_parent(y)?;
    if t.rows() != y.dim || t.cols() != x.dim {
        return Err(Error::ShapeMismatch(format!(
            "{}×{} map between modules of dimensions {} and {}",
            t.rows(),
            t.cols(),
            x.dim,
            y.dim
        )));
    }
    Ok(x.parent.algebra_generators().iter().all(|&g| t.compose(&x.action[g]) == y.action[g].compose(t)))
}

/// A basis of `Hom_H(X, Y)`, each element a `dim Y × dim X` matrix.
pub fn hom_space(x: &HModule, y: &HModule) -> Result<Vec<ExactMatrix>> {
    x.same_parent(y)?;
    let (m, n) = (x.dim, y.dim);
    // unknown T[i][j] at index i*m + j
    let mut red = RowReducer::new(n * m);
    for g in x.parent.algebra_generators() {
        let rx = x.action_matrix(g);
        let ry = y.action_matrix(g);
        for i in 0..n {
            for j in 0..m {
                // (T ρX)[i][j] - (ρY T)[i][j]
                let mut row = vec![Scalar::zero(); n * m];
                for k in 0..m {
                    row[i * m + k] += rx.get(k, j);
                }
                for k in 0..n {
                    row[k * m + j] -= ry.get(i, k);
                }
                red.push(row);
            }
        }
    }
    Ok(red
        .kernel()
        .into_iter()
        .map(|v| ExactMatrix::new(n, m, v).expect("kernel vector has n·m entries"))
        .collect())
}

#[cfg(test)]
mod tests;
