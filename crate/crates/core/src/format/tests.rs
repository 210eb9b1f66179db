use super::*;
use crate::group::FiniteGroup;
use crate::hopf::{drinfeld_double, group_algebra, sweedler};
use crate::modular::{double_modular_data, semion};
use crate::rep::regular_module;

const Z2: &str = "\
# group algebra of Z/2
hopf dim=2 field=zeta(1)
labels: 1 g
mult: (0,0,0) q(1)
mult:
  (0,1,1) q(1)
  (1,0,1) q(1)
  (1,1,0) 1
comult: (0,0,0) q(1)
comult: (1,1,1) q(1)
unit: (0) q(1)
counit: (0) q(1)
counit: (1) q(1)
antipode: (0,0) q(1)
antipode: (1,1) q(1)
rmatrix: (0,0) q(1)
";

#[test]
fn hand_written_group_algebra() {
    let f = parse_hopf(Z2).unwrap();
    let g = group_algebra(&FiniteGroup::cyclic(2));
    assert_eq!(f.presentation.dim(), 2);
    assert_eq!(f.presentation.labels(), ["1", "g"]);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(f.presentation.product_of_basis(i, j), g.product_of_basis(i, j));
        }
    }
    assert!(f.r.is_some());
}

#[test]
fn hopf_round_trip() {
    let (p, r) = sweedler(&CycloScalar::from_int(2));
    let text = write_hopf(&p, Some(&r));
    let f = parse_hopf(&text).unwrap();
    assert_eq!(f.presentation, p);
    assert_eq!(f.r.unwrap(), r);
    let (d, rd) = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(3)));
    let f = parse_hopf(&write_hopf(&d, Some(&rd))).unwrap();
    assert_eq!(f.presentation, d);
}

#[test]
fn index_out_of_range_is_a_parse_error() {
    let bad = Z2.replace("(1,1,0) 1", "(1,1,7) 1");
    match parse_hopf(&bad) {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (8, 3)),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn coassociativity_violation_is_named() {
    let bad = Z2.replace("comult: (1,1,1) q(1)", "comult: (1,1,1) q(1)\ncomult: (1,0,0) q(1)");
    assert_eq!(parse_hopf(&bad).unwrap_err(), Error::Validation("coassociativity".into()));
}

#[test]
fn bad_r_matrix_is_named() {
    let bad = Z2.replace("rmatrix: (0,0) q(1)", "rmatrix: (0,0) q(2)");
    assert!(matches!(parse_hopf(&bad), Err(Error::Validation(_))));
}

#[test]
fn parse_error_positions() {
    let cases = [
        ("hopf dim=x\n", 1, 6),
        ("hopf dim=2\nmult: (0,0) q(1)\n", 2, 7),
        ("hopf dim=2\nmult: (0,0,0) q(1\n", 2, 15),
        ("hopf dim=2\nwhat is this\n", 2, 1),
        ("hopf dim=2 field=zeta(0)\n", 1, 12),
        ("", 1, 1),
        ("widget dim=2\n", 1, 1),
    ];
    for (src, line, col) in cases {
        match parse_input(src) {
            Err(Error::Parse { line: l, col: c, .. }) => assert_eq!((l, c), (line, col), "{src:?}"),
            other => panic!("{src:?}: expected parse error, got {other:?}"),
        }
    }
}

#[test]
fn modular_round_trip() {
    for d in [semion(), double_modular_data(&FiniteGroup::symmetric(3)).unwrap()] {
        let text = write_modular(&d);
        assert_eq!(parse_modular(&text).unwrap(), d);
    }
}

#[test]
fn modular_without_labels_gets_indices() {
    let d = parse_modular("modular rank=2\nS: (0,0) 1/2\nS: (0,1) 1/2\nS: (1,0) 1/2\nS: (1,1) 1/2\nT: (0) 1\nT: (1) 1\n").unwrap();
    assert_eq!(d.labels(), ["0", "1"]);
}

#[test]
fn algebra_and_group_round_trip() {
    let a = AlgebraPresentation::matrix_algebra(2);
    assert_eq!(parse_algebra(&write_algebra(&a)).unwrap(), a);
    let g = FiniteGroup::symmetric(3);
    let parsed = parse_group(&write_group(&g)).unwrap();
    assert_eq!(parsed.table_rows(), g.table_rows());
    assert!(matches!(parse_group("group order=2\n0 1\n1 1\n"), Err(Error::NotAGroup(_))));
    assert!(matches!(parse_group("group order=2\n0 1\n1 2\n"), Err(Error::Parse { line: 3, col: 3, .. })));
}

#[test]
fn module_round_trip_and_resolution() {
    let p = Arc::new(group_algebra(&FiniteGroup::cyclic(3)));
    let m = regular_module(&p);
    let text = write_module(&m, "cz3");
    let f = parse_module(&text).unwrap();
    assert_eq!(f.over, "cz3");
    let back = f.resolve(&p).unwrap();
    for h in 0..3 {
        assert_eq!(back.action_matrix(h), m.action_matrix(h));
    }
    let broken = ModuleFile { dim: 1, over: String::new(), action: vec![(0, 0, 0, CycloScalar::from_int(2))] };
    assert!(matches!(broken.resolve(&p), Err(Error::Validation(_))));
}

#[test]
fn kind_is_dispatched() {
    assert_eq!(parse_input(Z2).unwrap().kind(), "hopf");
    assert_eq!(parse_input(&write_algebra(&AlgebraPresentation::split(2))).unwrap().kind(), "algebra");
    assert!(matches!(parse_modular(Z2), Err(Error::Parse { line: 2, .. })));
}
