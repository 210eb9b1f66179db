//! Central-separable versus sandwich-map tests on a few algebras.

use braidcheck::azumaya::{is_azumaya, separability_idempotent, AlgebraPresentation};
use braidcheck::exact::CycloScalar;
use braidcheck::group::FiniteGroup;

fn main() {
    let q = CycloScalar::from_int;
    let algebras = [
        ("M2(Q)", AlgebraPresentation::matrix_algebra(2)),
        ("M3(Q)", AlgebraPresentation::matrix_algebra(3)),
        ("Q×Q", AlgebraPresentation::split(2)),
        ("Q[x]/(x²)", AlgebraPresentation::monogenic(&[q(0), q(0)]).unwrap()),
        ("Q(i)", AlgebraPresentation::monogenic(&[q(1), q(0)]).unwrap()),
        ("Q[S3]", AlgebraPresentation::group_algebra(&FiniteGroup::symmetric(3))),
        ("M2 ⊗ M2", AlgebraPresentation::matrix_algebra(2).tensor(&AlgebraPresentation::matrix_algebra(2))),
    ];
    for (name, a) in &algebras {
        let r = is_azumaya(a).expect("routes agree");
        println!(
            "{name:<10} center {}  separable {:<5}  sandwich rank {:>3}/{:<3}  Azumaya {}",
            r.center_dim,
            r.separable,
            r.sandwich_rank,
            r.dim * r.dim,
            r.verdict
        );
    }
    let e = separability_idempotent(&AlgebraPresentation::matrix_algebra(2)).expect("M2 is separable");
    println!("a separability idempotent of M2 has {} terms", e.len());
}
