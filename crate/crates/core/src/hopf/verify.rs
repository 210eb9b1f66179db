use super::presentation::HopfPresentation;
use super::RMatrix;
use crate::axioms::AxiomReport;
use crate::exact::{CycloScalar, ExactMatrix, SparseVec};
use crate::error::{Error, Result};

type Scalar = CycloScalar;

fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |i| (0..d).map(move |j| (i, j)))
}

/// Checks every Hopf algebra axiom as an exact tensor identity.
pub fn verify_hopf(p: &HopfPresentation) -> AxiomReport {
    let d = p.dim();
    let e = |i: usize| SparseVec::basis(i);
    let mut rep = AxiomReport::new();

    let assoc = (0..d * d * d).map(|t| (t / (d * d), (t / d) % d, t % d)).find(|&(i, j, k)| {
        let lhs = p.mul(p.product_of_basis(i, j), &e(k));
        let rhs = p.mul(&e(i), p.product_of_basis(j, k));
        lhs != rhs
    });
    rep.record("associativity", assoc.map(|(i, j, k)| vec![i, j, k]));

    let unit = (0..d).find(|&i| p.mul(p.unit(), &e(i)) != e(i) || p.mul(&e(i), p.unit()) != e(i));
    rep.record("unitality", unit.map(|i| vec![i]));

    let coassoc = (0..d).find(|&i| {
        let delta = p.coproduct_of_basis(i);
        p.coproduct_at(2, 0, delta) != p.coproduct_at(2, 1, delta)
    });
    rep.record("coassociativity", coassoc.map(|i| vec![i]));

    let counit = (0..d).find(|&i| {
        let delta = p.coproduct_of_basis(i);
        p.counit_at(2, 0, delta) != e(i) || p.counit_at(2, 1, delta) != e(i)
    });
    rep.record("counitality", counit.map(|i| vec![i]));

    let bialg = pairs(d).find(|&(i, j)| {
        let lhs = p.coproduct(p.product_of_basis(i, j));
        let rhs = p.mul_tensor(2, p.coproduct_of_basis(i), p.coproduct_of_basis(j));
        lhs != rhs
    });
    let unit_ok = p.coproduct(p.unit()) == p.unit_tensor(2) && p.counit(p.unit()).is_one();
    rep.record(
        "bialgebra compatibility",
        bialg.map(|(i, j)| vec![i, j]).or(if unit_ok { None } else { Some(vec![]) }),
    );

    let counit_mult = pairs(d).find(|&(i, j)| {
        p.counit(p.product_of_basis(i, j)) != &p.counit_vector()[i] * &p.counit_vector()[j]
    });
    rep.record("counit multiplicativity", counit_mult.map(|(i, j)| vec![i, j]));

    let antipode = (0..d).find(|&i| {
        let target = p.unit().scale(&p.counit_vector()[i]);
        let delta = p.coproduct_of_basis(i);
        let left = contract_mult(p, &p.map_at(2, 0, delta, |k| p.antipode_of_basis(k).clone()));
        let right = contract_mult(p, &p.map_at(2, 1, delta, |k| p.antipode_of_basis(k).clone()));
        left != target || right != target
    });
    rep.record("antipode", antipode.map(|i| vec![i]));

    let s_inv = p.antipode_matrix().rank() == d;
    rep.record_bool("antipode invertible", s_inv);

    let anti_mult = pairs(d).find(|&(i, j)| {
        p.antipode(p.product_of_basis(i, j)) != p.mul(p.antipode_of_basis(j), p.antipode_of_basis(i))
    });
    rep.record("antipode anti-multiplicative", anti_mult.map(|(i, j)| vec![i, j]));

    let anti_comult = (0..d).find(|&i| {
        let lhs = p.coproduct(p.antipode_of_basis(i));
        let delta = p.coproduct_of_basis(i);
        let s1 = p.map_at(2, 0, delta, |k| p.antipode_of_basis(k).clone());
        let s2 = p.map_at(2, 1, &s1, |k| p.antipode_of_basis(k).clone());
        lhs != p.flip(&s2)
    });
    rep.record("antipode anti-comultiplicative", anti_comult.map(|i| vec![i]));
    rep
}

/// `m: H⊗H -> H` applied to a sparse tensor.
pub(crate) fn contract_mult(p: &HopfPresentation, t: &SparseVec) -> SparseVec {
    let d = p.dim();
    let mut acc = crate::exact::Accumulator::new();
    for (idx, x) in t.iter() {
        acc.add_vec(p.product_of_basis(idx / d, idx % d), x);
    }
    acc.finish()
}

/// `R_{13}`, `R_{12}`, `R_{23}` as elements of `H^{⊗3}`.
pub(crate) fn leg(p: &HopfPresentation, r: &SparseVec, legs: (usize, usize)) -> SparseVec {
    let missing = 3 - legs.0 - legs.1;
    p.insert_unit(2, missing, r)
}

/// Checks invertibility of `R` and the three quasitriangularity identities.
pub fn verify_quasitriangular(p: &HopfPresentation, r: &RMatrix) -> Result<AxiomReport> {
    let d = p.dim();
    let rv = r.element();
    let mut rep = AxiomReport::new();
    let one = p.unit_tensor(2);

    // R^{-1} = (S⊗id)(R) for any quasitriangular structure.
    let candidate = p.map_at(2, 0, rv, |k| p.antipode_of_basis(k).clone());
    let inverse_ok = p.mul_tensor(2, rv, &candidate) == one && p.mul_tensor(2, &candidate, rv) == one;
    if !inverse_ok {
        let size = d * d;
        let cols: Vec<Vec<Scalar>> =
            (0..size).map(|j| p.mul_tensor(2, rv, &SparseVec::basis(j)).to_dense(size)).collect();
        let rank = ExactMatrix::from_columns(size, &cols).rank();
        if rank < size {
            return Err(Error::Singular { rank, size });
        }
    }
    rep.record_bool("R invertible with inverse (S⊗id)R", inverse_ok);

    let conj = (0..d).find(|&i| {
        let delta = p.coproduct_of_basis(i);
        p.mul_tensor(2, rv, delta) != p.mul_tensor(2, &p.flip(delta), rv)
    });
    rep.record("R Δ(h) R^-1 = Δop(h)", conj.map(|i| vec![i]));

    let r13 = leg(p, rv, (0, 2));
    let r12 = leg(p, rv, (0, 1));
    let r23 = leg(p, rv, (1, 2));
    let left = p.coproduct_at(2, 0, rv) == p.mul_tensor(3, &r13, &r23);
    rep.record_bool("(Δ⊗id)R = R13 R23", left);
    let right = p.coproduct_at(2, 1, rv) == p.mul_tensor(3, &r13, &r12);
    rep.record_bool("(id⊗Δ)R = R13 R12", right);
    Ok(rep)
}
