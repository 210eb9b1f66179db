//! Axiom checks and Drinfeld-map ranks for the built-in quasitriangular Hopf algebras.

use braidcheck::exact::CycloScalar;
use braidcheck::group::FiniteGroup;
use braidcheck::hopf::{
    drinfeld_double, group_algebra, integrals, is_factorizable, sweedler, uq_sl2, verify_hopf,
    verify_quasitriangular, HopfPresentation, RMatrix,
};

fn show(name: &str, p: &HopfPresentation, r: &RMatrix) {
    let hopf = verify_hopf(p).all_passed();
    let quasi = verify_quasitriangular(p, r).map(|a| a.all_passed()).unwrap_or(false);
    let f = is_factorizable(p, r);
    let unimodular = integrals(p).map(|i| i.unimodular).unwrap_or(false);
    println!(
        "{name:<14} dim {:>2}  hopf {hopf}  quasitriangular {quasi}  unimodular {unimodular}  Dr rank {:>2}  factorizable {}",
        p.dim(),
        f.rank,
        f.factorizable
    );
}

fn main() {
    let z3 = group_algebra(&FiniteGroup::cyclic(3));
    show("k[Z3]", &z3, &RMatrix::trivial(&z3));
    let (d, r) = drinfeld_double(&z3);
    show("D(Z3)", &d, &r);
    for l in 0..3 {
        let (p, r) = sweedler(&CycloScalar::from_int(l));
        show(&format!("Sweedler({l})"), &p, &r);
    }
    let (s, _) = sweedler(&CycloScalar::zero());
    let (ds, rs) = drinfeld_double(&s);
    show("D(Sweedler)", &ds, &rs);
    let (u, ru) = uq_sl2(3).expect("l = 3 is supported");
    show("u_q(sl2), l=3", &u, &ru);
}
