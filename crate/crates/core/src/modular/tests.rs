use super::*;
use proptest::prelude::*;

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn fixtures() -> Vec<(&'static str, ModularData)> {
    vec![
        ("trivial", trivial_data()),
        ("Rep(Z2)", symmetric_rep_z2()),
        ("D(Z2)", double_modular_data(&z(2)).unwrap()),
        ("D(Z3)", double_modular_data(&z(3)).unwrap()),
        ("D(S3)", double_modular_data(&FiniteGroup::symmetric(3)).unwrap()),
        ("semion", semion()),
    ]
}

/// The class/character formula for an abelian group, written out directly:
/// labels `(a, χ_k)`, `S = χ_k(b) χ_l(a) / |G|` conjugated, `T = χ_k(a)`.
fn abelian_double_oracle(n: i64) -> (ExactMatrix, Vec<Scalar>) {
    let r = (n * n) as usize;
    let chi = |k: i64, a: i64| Scalar::zeta_pow(n as u32, k * a);
    let label = |i: usize| (i as i64 / n, i as i64 % n);
    let s = ExactMatrix::from_fn(r, r, |i, j| {
        let ((a, k), (b, l)) = (label(i), label(j));
        &(&chi(k, b) * &chi(l, a)).conj() * &Scalar::frac(1, n)
    });
    let t = (0..r).map(|i| chi(label(i).1, label(i).0)).collect();
    (s, t)
}

#[test]
fn double_of_z2_regression() {
    let d = double_modular_data(&z(2)).unwrap();
    let half = Scalar::frac(1, 2);
    let expected = ExactMatrix::from_int_rows(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]).scale(&half);
    assert_eq!(d.s(), &expected);
    assert_eq!(d.t_diagonal(), [q(1), q(1), q(1), q(-1)]);
    assert!(verify_modular_data(&d).all_passed());
    assert_eq!(muger_center(&d), [0]);
    assert!(is_nondegenerate_modular(&d).unwrap());
}

#[test]
fn abelian_doubles_match_the_oracle() {
    for n in 2..=5 {
        let d = double_modular_data(&z(n as usize)).unwrap();
        let (s, t) = abelian_double_oracle(n);
        assert_eq!(d.s(), &s, "n = {n}");
        assert_eq!(d.t_diagonal(), &t[..], "n = {n}");
    }
}

#[test]
fn double_ranks() {
    assert_eq!(double_modular_data(&z(3)).unwrap().rank(), 9);
    let s3 = double_modular_data(&FiniteGroup::symmetric(3)).unwrap();
    assert_eq!(s3.rank(), 8);
    assert!(verify_modular_data(&s3).all_passed());
    assert!(is_nondegenerate_modular(&s3).unwrap());
    let big = FiniteGroup::cyclic(13);
    assert!(matches!(double_modular_data(&big), Err(Error::UnsupportedParams(_))));
}

#[test]
fn symmetric_z2() {
    let d = symmetric_rep_z2();
    let rep = verify_modular_data(&d);
    assert_eq!(rep.passed("S invertible"), Some(false));
    assert!(rep.axioms.iter().filter(|a| a.name != "S invertible").all(|a| a.passed));
    assert_eq!(muger_center(&d), [0, 1]);
    assert!(!is_nondegenerate_modular(&d).unwrap());
}

#[test]
fn zero_in_first_column_fails() {
    let d = ModularData::new(
        vec!["0".into(), "1".into()],
        ExactMatrix::from_int_rows(&[&[1, 0], &[0, 1]]),
        ExactMatrix::identity(2),
    )
    .unwrap();
    assert_eq!(verify_modular_data(&d).passed("S₀ₓ nonzero"), Some(false));
}

#[test]
fn shape_errors() {
    let e = ModularData::new(vec!["0".into()], ExactMatrix::identity(2), ExactMatrix::identity(2));
    assert!(matches!(e, Err(Error::ShapeMismatch(_))));
    let e = ModularData::new(vec!["0".into(), "1".into()], ExactMatrix::identity(2), ExactMatrix::from_int_rows(&[&[1, 1], &[0, 1]]));
    assert!(matches!(e, Err(Error::ShapeMismatch(_))));
}

#[test]
fn semion_is_modular() {
    let d = semion();
    assert!(verify_modular_data(&d).all_passed());
    assert!(is_nondegenerate_modular(&d).unwrap());
    let n = d.fusion_rules().unwrap();
    assert!(n[1][1][0].is_one() && n[1][1][1].is_zero());
}

#[test]
fn deligne_examples() {
    let sym = symmetric_rep_z2();
    let dz2 = double_modular_data(&z(2)).unwrap();
    let p = deligne_product(&sym, &dz2);
    assert_eq!(p.rank(), 8);
    // (0, 0) and (1, 0)
    assert_eq!(muger_center(&p), [0, 4]);
    let rev = reverse_data(&dz2).unwrap();
    assert!(is_nondegenerate_modular(&deligne_product(&dz2, &rev)).unwrap());
    assert_eq!(relabeling(&deligne_product(&dz2, &trivial_data()), &dz2), Some(vec![0, 1, 2, 3]));
    assert_eq!(reverse_data(&reverse_data(&semion()).unwrap()).unwrap(), semion());
    assert!(relabeling(&semion(), &reverse_data(&semion()).unwrap()).is_none());
}

#[test]
fn relabeling_finds_permutations() {
    let a = double_modular_data(&z(3)).unwrap();
    let b = deligne_product(&trivial_data(), &a);
    let p = relabeling(&a, &b).unwrap();
    assert_eq!(p.len(), 9);
    let swapped = deligne_product(&semion(), &symmetric_rep_z2());
    let other = deligne_product(&symmetric_rep_z2(), &semion());
    assert_eq!(relabeling(&swapped, &other), Some(vec![0, 2, 1, 3]));
}

#[test]
fn reverse_preserves_fusion() {
    for (name, d) in fixtures() {
        let rev = reverse_data(&d).unwrap();
        assert_eq!(is_nondegenerate_modular(&d).unwrap(), is_nondegenerate_modular(&rev).unwrap(), "{name}");
        if let (Ok(a), Ok(b)) = (d.fusion_rules(), rev.fusion_rules()) {
            assert_eq!(a, b, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_of_fixtures(i in 0usize..6, j in 0usize..6) {
        let f = fixtures();
        let (a, b) = (&f[i].1, &f[j].1);
        let p = deligne_product(a, b);
        let expected: Vec<usize> = muger_center(a)
            .iter()
            .flat_map(|x| muger_center(b).into_iter().map(move |y| x * b.rank() + y))
            .collect();
        prop_assert_eq!(muger_center(&p), expected);
        prop_assert_eq!(
            is_nondegenerate_modular(&p).unwrap(),
            is_nondegenerate_modular(a).unwrap() && is_nondegenerate_modular(b).unwrap()
        );
    }
}
