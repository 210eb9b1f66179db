use crate::exact::{Accumulator, CycloScalar, ExactMatrix, RowReducer, SparseVec};
use crate::error::{Error, Result};

type Scalar = CycloScalar;

/// A finite-dimensional Hopf algebra given by structure constants in a fixed basis.
///
/// Elements of `H` are sparse vectors of length `dim`; elements of `H⊗H` use the
/// flattened index `i * dim + j`, and `H⊗H⊗H` likewise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    dim: usize,
    labels: Vec<String>,
    field: u32,
    /// `products[i * dim + j]` = `e_i · e_j`.
    products: Vec<SparseVec>,
    unit: SparseVec,
    /// `coproducts[i]` = `Δ(e_i)` in `H⊗H`.
    coproducts: Vec<SparseVec>,
    counit: Vec<Scalar>,
    /// `antipode_images[i]` = `S(e_i)`.
    antipode_images: Vec<SparseVec>,
}

/// Raw structure-constant tensors, indexed as in the text file format.
#[derive(Clone, Debug, Default)]
pub struct HopfTensors {
    pub dim: usize,
    pub field: u32,
    pub labels: Option<Vec<String>>,
    /// `(i, j, k, c)`: coefficient of `e_k` in `e_i·e_j`.
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    /// `(i, j, k, c)`: coefficient of `e_j⊗e_k` in `Δ(e_i)`.
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub unit: Vec<(usize, Scalar)>,
    pub counit: Vec<(usize, Scalar)>,
    /// `(i, j, c)`: coefficient of `e_j` in `S(e_i)`.
    pub antipode: Vec<(usize, usize, Scalar)>,
}

fn check_index(name: &str, idx: usize, dim: usize) -> Result<()> {
    if idx >= dim {
        Err(Error::DimensionMismatch(format!("{name} index {idx} out of range for dim {dim}")))
    } else {
        Ok(())
    }
}

fn accumulate_into(slots: &mut [Accumulator], slot: usize, idx: usize, c: Scalar) {
    slots[slot].add(idx, c);
}

impl HopfPresentation {
    pub fn from_tensors(t: HopfTensors) -> Result<Self> {
        let d = t.dim;
        if d == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        let labels = match t.labels {
            Some(l) if l.len() == d => l,
            Some(l) => {
                return Err(Error::DimensionMismatch(format!("{} labels for dim {d}", l.len())));
            }
            None => (0..d).map(|i| format!("e{i}")).collect(),
        };
        let mut prod: Vec<Accumulator> = (0..d * d).map(|_| Accumulator::new()).collect();
        for (i, j, k, c) in t.mult {
            for (nm, x) in [("mult", i), ("mult", j), ("mult", k)] {
                check_index(nm, x, d)?;
            }
            accumulate_into(&mut prod, i * d + j, k, c);
        }
        let mut cop: Vec<Accumulator> = (0..d).map(|_| Accumulator::new()).collect();
        for (i, j, k, c) in t.comult {
            for x in [i, j, k] {
                check_index("comult", x, d)?;
            }
            accumulate_into(&mut cop, i, j * d + k, c);
        }
        let mut unit = Accumulator::new();
        for (k, c) in t.unit {
            check_index("unit", k, d)?;
            unit.add(k, c);
        }
        let mut counit = vec![Scalar::zero(); d];
        for (i, c) in t.counit {
            check_index("counit", i, d)?;
            counit[i] += &c;
        }
        let mut anti: Vec<Accumulator> = (0..d).map(|_| Accumulator::new()).collect();
        for (i, j, c) in t.antipode {
            check_index("antipode", i, d)?;
            check_index("antipode", j, d)?;
            accumulate_into(&mut anti, i, j, c);
        }
        Ok(HopfPresentation {
            dim: d,
            labels,
            field: t.field.max(1),
            products: prod.into_iter().map(Accumulator::finish).collect(),
            unit: unit.finish(),
            coproducts: cop.into_iter().map(Accumulator::finish).collect(),
            counit,
            antipode_images: anti.into_iter().map(Accumulator::finish).collect(),
        })
    }

    /// Inverse of [`from_tensors`](Self::from_tensors), listing nonzero entries only.
    pub fn to_tensors(&self) -> HopfTensors {
        let d = self.dim;
        let mut t = HopfTensors { dim: d, field: self.field, labels: Some(self.labels.clone()), ..Default::default() };
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.products[i * d + j].iter() {
                    t.mult.push((i, j, *k, c.clone()));
                }
            }
            for (jk, c) in self.coproducts[i].iter() {
                t.comult.push((i, jk / d, jk % d, c.clone()));
            }
            for (j, c) in self.antipode_images[i].iter() {
                t.antipode.push((i, *j, c.clone()));
            }
            if !self.counit[i].is_zero() {
                t.counit.push((i, self.counit[i].clone()));
            }
        }
        t.unit = self.unit.iter().cloned().collect();
        t
    }

    pub(crate) fn from_parts(
        labels: Vec<String>,
        field: u32,
        products: Vec<SparseVec>,
        unit: SparseVec,
        coproducts: Vec<SparseVec>,
        counit: Vec<Scalar>,
        antipode_images: Vec<SparseVec>,
    ) -> Self {
        HopfPresentation { dim: labels.len(), labels, field, products, unit, coproducts, counit, antipode_images }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Conductor `n` of the coefficient field `Q(zeta_n)`.
    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn coproduct_of_basis(&self, i: usize) -> &SparseVec {
        &self.coproducts[i]
    }

    pub fn antipode_of_basis(&self, i: usize) -> &SparseVec {
        &self.antipode_images[i]
    }

    /// Mutable access to raw structure constants, for corruption tests.
    #[doc(hidden)]
    pub fn tensors_mut(&mut self) -> (&mut Vec<SparseVec>, &mut Vec<SparseVec>, &mut Vec<Scalar>, &mut Vec<SparseVec>, &mut SparseVec) {
        (&mut self.products, &mut self.coproducts, &mut self.counit, &mut self.antipode_images, &mut self.unit)
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(i)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(&self.products[i * self.dim + j], &(x * y));
            }
        }
        acc.finish()
    }

    /// Product in `H^{⊗k}`, factorwise.
    pub fn mul_tensor(&self, k: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (ia, x) in a.iter() {
            let ai = split_index(*ia, d, k);
            for (ib, y) in b.iter() {
                let bi = split_index(*ib, d, k);
                // expand product of k factors
                let mut partial: Vec<(usize, Scalar)> = vec![(0, x * y)];
                for f in 0..k {
                    let prod = &self.products[ai[f] * d + bi[f]];
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (m, z) in prod.iter() {
                            next.push((idx * d + m, c * z));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    acc.add(idx, c);
                }
            }
        }
        acc.finish()
    }

    pub fn coproduct(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            acc.add_vec(&self.coproducts[*i], x);
        }
        acc.finish()
    }

    /// Applies `Δ` to tensor factor `pos` of an element of `H^{⊗k}`, giving `H^{⊗(k+1)}`.
    pub fn coproduct_at(&self, k: usize, pos: usize, a: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (idx, x) in a.iter() {
            let parts = split_index(*idx, d, k);
            for (jk, c) in self.coproducts[parts[pos]].iter() {
                let mut flat = 0usize;
                for (f, p) in parts.iter().enumerate() {
                    if f == pos {
                        flat = flat * d * d + jk;
                    } else {
                        flat = flat * d + p;
                    }
                }
                acc.add(flat, x * c);
            }
        }
        acc.finish()
    }

    /// Applies `map` (given on basis vectors) to factor `pos` of an element of `H^{⊗k}`.
    pub fn map_at(&self, k: usize, pos: usize, a: &SparseVec, map: impl Fn(usize) -> SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (idx, x) in a.iter() {
            let mut parts = split_index(*idx, d, k);
            for (j, c) in map(parts[pos]).iter() {
                parts[pos] = *j;
                acc.add(join_index(&parts, d), x * c);
            }
        }
        acc.finish()
    }

    /// Contracts factor `pos` with the counit, giving `H^{⊗(k-1)}`.
    pub fn counit_at(&self, k: usize, pos: usize, a: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (idx, x) in a.iter() {
            let mut parts = split_index(*idx, d, k);
            let e = &self.counit[parts[pos]];
            if e.is_zero() {
                continue;
            }
            parts.remove(pos);
            acc.add(join_index(&parts, d), x * e);
        }
        acc.finish()
    }

    pub fn counit(&self, a: &SparseVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in a.iter() {
            if !self.counit[*i].is_zero() {
                s += &(x * &self.counit[*i]);
            }
        }
        s
    }

    pub fn antipode(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            acc.add_vec(&self.antipode_images[*i], x);
        }
        acc.finish()
    }

    /// Swaps the two factors of an element of `H⊗H`.
    pub fn flip(&self, a: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (idx, x) in a.iter() {
            acc.add((idx % d) * d + idx / d, x.clone());
        }
        acc.finish()
    }

    /// Inserts the unit as a new factor at position `pos` of an element of `H^{⊗k}`.
    pub fn insert_unit(&self, k: usize, pos: usize, a: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (idx, x) in a.iter() {
            let parts = split_index(*idx, d, k);
            for (u, c) in self.unit.iter() {
                let mut p = parts.clone();
                p.insert(pos, *u);
                acc.add(join_index(&p, d), x * c);
            }
        }
        acc.finish()
    }

    pub fn unit_tensor(&self, k: usize) -> SparseVec {
        let mut v = self.unit.clone();
        for f in 1..k {
            v = self.insert_unit(f, f, &v);
        }
        v
    }

    /// Matrix of left multiplication by `a`, columns indexed by basis.
    pub fn left_mult_matrix(&self, a: &SparseVec) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul(a, &SparseVec::basis(j)).to_dense(self.dim)).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }

    pub fn right_mult_matrix(&self, a: &SparseVec) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul(&SparseVec::basis(j), a).to_dense(self.dim)).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }

    /// Matrix of the antipode: column `i` is `S(e_i)`.
    pub fn antipode_matrix(&self) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> = self.antipode_images.iter().map(|v| v.to_dense(self.dim)).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }

    /// Inverse antipode as images of basis vectors.
    pub fn antipode_inverse(&self) -> Result<Vec<SparseVec>> {
        let inv = self.antipode_matrix().inverse()?;
        Ok((0..self.dim).map(|j| SparseVec::from_dense(&inv.column(j))).collect())
    }

    /// A small set of basis indices generating `H` as a unital algebra, chosen greedily.
    pub fn algebra_generators(&self) -> Vec<usize> {
        let d = self.dim;
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.subalgebra(&gens);
        for i in 0..d {
            if span.rank() == d {
                break;
            }
            if !span.contains(SparseVec::basis(i).to_dense(d)) {
                gens.push(i);
                span = self.subalgebra(&gens);
            }
        }
        gens
    }

    fn subalgebra(&self, gens: &[usize]) -> RowReducer {
        let d = self.dim;
        let mut red = RowReducer::new(d);
        let mut queue = vec![self.unit.clone()];
        red.push(self.unit.to_dense(d));
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = self.mul(&SparseVec::basis(g), &v);
                if red.push(w.to_dense(d)) {
                    queue.push(w);
                }
            }
        }
        red
    }
}

pub(crate) fn split_index(mut idx: usize, d: usize, k: usize) -> Vec<usize> {
    let mut parts = vec![0; k];
    for f in (0..k).rev() {
        parts[f] = idx % d;
        idx /= d;
    }
    parts
}

pub(crate) fn join_index(parts: &[usize], d: usize) -> usize {
    parts.iter().fold(0, |acc, p| acc * d + p)
}
