//! Modular data of D(S3), a symmetric category, and what Deligne products do to them.

use braidcheck::group::FiniteGroup;
use braidcheck::modular::{
    deligne_product, double_modular_data, is_nondegenerate_modular, muger_center, reverse_data, semion,
    symmetric_rep_z2, verify_modular_data,
};

fn main() {
    let ds3 = double_modular_data(&FiniteGroup::symmetric(3)).expect("order 6 is within bounds");
    println!("D(S3): rank {}, labels {:?}", ds3.rank(), ds3.labels());
    println!("  axioms pass: {}", verify_modular_data(&ds3).all_passed());
    println!("  quantum dimensions: {:?}", ds3.quantum_dimensions().expect("S₀ₓ nonzero"));
    println!("  T: {:?}", ds3.t_diagonal());

    let sym = symmetric_rep_z2();
    println!("Rep(Z2), symmetric: Müger center {:?}", muger_center(&sym));

    let mixed = deligne_product(&semion(), &sym);
    let center: Vec<&str> = muger_center(&mixed).iter().map(|&i| mixed.labels()[i].as_str()).collect();
    println!("semion ⊠ Rep(Z2): transparent labels {center:?}");
    println!("  non-degenerate: {}", is_nondegenerate_modular(&mixed).expect("criteria agree"));

    let both = deligne_product(&semion(), &reverse_data(&semion()).expect("T invertible"));
    println!("semion ⊠ reverse(semion): non-degenerate {}", is_nondegenerate_modular(&both).expect("criteria agree"));
}
