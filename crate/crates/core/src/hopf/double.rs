use super::presentation::HopfPresentation;
use super::RMatrix;
use crate::exact::{Accumulator, CycloScalar, SparseVec};

type Scalar = CycloScalar;

/// The Drinfeld double `D(H)` on `H*^cop ⊗ H`, basis `e^i⊗e_j` at index
/// `i·d + j`, with its canonical R-matrix `Σ (ε⊗e_i) ⊗ (e^i⊗1)`.
///
/// Panics if the antipode of `p` is singular; callers are expected to have
/// run `verify_hopf` first.
pub fn drinfeld_double(p: &HopfPresentation) -> (HopfPresentation, RMatrix) {
    let d = p.dim();
    let dd = d * d;
    let s_inv = p.antipode_inverse().expect("antipode of a Hopf algebra is invertible");

    // e^i e^j in H*, indexed i*d + j
    let mut dual_prod = vec![Accumulator::new(); d * d];
    for k in 0..d {
        for (ij, c) in p.coproduct_of_basis(k).iter() {
            dual_prod[*ij].add(k, c.clone());
        }
    }
    let dual_prod: Vec<SparseVec> = dual_prod.into_iter().map(Accumulator::finish).collect();
    let dual_mul = |f: &SparseVec, g: &SparseVec| {
        let mut acc = Accumulator::new();
        for (i, x) in f.iter() {
            for (j, y) in g.iter() {
                acc.add_vec(&dual_prod[i * d + j], &(x * y));
            }
        }
        acc.finish()
    };
    let epsilon = SparseVec::from_dense(p.counit_vector());

    // twisted[x][z] lists, for each t, S^{-1}(e_z) e_t e_x
    let mut twisted: Vec<Option<Vec<SparseVec>>> = vec![None; d * d];
    let mut twist = |x: usize, z: usize| -> Vec<SparseVec> {
        twisted[x * d + z]
            .get_or_insert_with(|| {
                (0..d).map(|t| p.mul(&p.mul(&s_inv[z], &SparseVec::basis(t)), &SparseVec::basis(x))).collect()
            })
            .clone()
    };

    let mut products = Vec::with_capacity(dd * dd);
    let delta2: Vec<SparseVec> = (0..d).map(|q| p.coproduct_at(2, 0, p.coproduct_of_basis(q))).collect();
    for left in 0..dd {
        let (pf, qa) = (left / d, left % d);
        for right in 0..dd {
            let (rg, sb) = (right / d, right % d);
            let mut acc = Accumulator::new();
            for (idx, c) in delta2[qa].iter() {
                let (x, y, z) = (idx / dd, (idx / d) % d, idx % d);
                let images = twist(x, z);
                let mut g = Accumulator::new();
                for (t, img) in images.iter().enumerate() {
                    let coeff = img.get(rg);
                    if !coeff.is_zero() {
                        g.add(t, coeff);
                    }
                }
                let f = dual_mul(&SparseVec::basis(pf), &g.finish());
                if f.is_empty() {
                    continue;
                }
                let h = p.product_of_basis(y, sb);
                acc.add_vec(&f.kron(h, d), c);
            }
            products.push(acc.finish());
        }
    }

    let unit = epsilon.kron(p.unit(), d);
    let counit: Vec<Scalar> = (0..dd).map(|k| &p.unit().get(k / d) * &p.counit_vector()[k % d]).collect();

    let coproducts: Vec<SparseVec> = (0..dd)
        .map(|k| {
            let (pf, qa) = (k / d, k % d);
            let mut acc = Accumulator::new();
            for i in 0..d {
                for j in 0..d {
                    let m = p.product_of_basis(i, j).get(pf);
                    if m.is_zero() {
                        continue;
                    }
                    for (xy, c) in p.coproduct_of_basis(qa).iter() {
                        let (x, y) = (xy / d, xy % d);
                        acc.add((j * d + x) * dd + (i * d + y), &m * c);
                    }
                }
            }
            acc.finish()
        })
        .collect();

    let labels: Vec<String> =
        (0..dd).map(|k| format!("{}*{}", p.labels()[k / d], p.labels()[k % d])).collect();
    let placeholder = HopfPresentation::from_parts(
        labels.clone(),
        p.field(),
        products.clone(),
        unit.clone(),
        coproducts.clone(),
        counit.clone(),
        vec![SparseVec::new(); dd],
    );
    // S(f⊗a) = (ε⊗S(a)) · (f∘S^{-1} ⊗ 1)
    let antipodes: Vec<SparseVec> = (0..dd)
        .map(|k| {
            let (pf, qa) = (k / d, k % d);
            let left = epsilon.kron(p.antipode_of_basis(qa), d);
            let mut f = Accumulator::new();
            for (t, img) in s_inv.iter().enumerate() {
                let c = img.get(pf);
                if !c.is_zero() {
                    f.add(t, c);
                }
            }
            let right = f.finish().kron(p.unit(), d);
            placeholder.mul(&left, &right)
        })
        .collect();

    let double = HopfPresentation::from_parts(labels, p.field(), products, unit, coproducts, counit, antipodes);

    let mut r = Accumulator::new();
    for i in 0..d {
        let a = epsilon.kron(&SparseVec::basis(i), d);
        let b = SparseVec::basis(i).kron(p.unit(), d);
        r.add_vec(&a.kron(&b, dd), &Scalar::one());
    }
    (double, RMatrix::from_element(dd, r.finish()))
}
