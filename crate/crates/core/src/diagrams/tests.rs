use super::*;
use crate::group::FiniteGroup;
use crate::hopf::{drinfeld_double, group_algebra, sweedler, HopfPresentation};
use crate::rep::{regular_module, trivial_module, verify_module};
use proptest::prelude::*;
use std::sync::Arc;

type Scalar = crate::exact::CycloScalar;

fn bind(pairs: &[(&str, &HModule)]) -> HashMap<String, HModule> {
    pairs.iter().map(|(s, m)| (s.to_string(), (*m).clone())).collect()
}

fn no_boxes() -> HashMap<String, ExactMatrix> {
    HashMap::new()
}

fn sweedler_setup() -> (Arc<HopfPresentation>, RMatrix) {
    let (p, r) = sweedler(&Scalar::one());
    (Arc::new(p), r)
}

/// One-dimensional Sweedler module `g ↦ s`, `x ↦ 0`.
fn character(p: &Arc<HopfPresentation>, s: i64) -> HModule {
    let m = |x: i64| ExactMatrix::from_int_rows(&[&[x]]);
    HModule::new(p.clone(), 1, vec![m(1), m(s), m(0), m(0)]).unwrap()
}

/// The left ideal `H(1 + g)` with basis `1 + g`, `x - gx`.
fn two_dim(p: &Arc<HopfPresentation>) -> HModule {
    let reg = regular_module(p);
    let basis = ExactMatrix::from_int_rows(&[&[1, 0], &[1, 0], &[0, 1], &[0, -1]]);
    let proj = ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
    let action = (0..4).map(|h| &(&proj * &reg.action_matrix(h)) * &basis).collect();
    let m = HModule::new(p.clone(), 2, action).unwrap();
    assert!(verify_module(&m));
    m
}

#[test]
fn typecheck_examples() {
    let d = parse_diagram("id(x)").unwrap();
    assert_eq!(typecheck(&d).unwrap(), vec![wires("x"), wires("x")]);

    let snake = parse_diagram("coev(x), id(x)\nid(x), ev(x)").unwrap();
    let types = typecheck(&snake).unwrap();
    assert_eq!(types.first().unwrap(), &wires("x"));
    assert_eq!(types.last().unwrap(), &wires("x"));

    let bad = parse_diagram("in: x y\nbraid(x, y)\nev(x)").unwrap();
    match typecheck(&bad) {
        Err(Error::TypeMismatch { slice, position, .. }) => assert_eq!((slice, position), (1, 0)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn declared_output_is_checked() {
    let d = parse_diagram("out: y\nid(x)").unwrap();
    assert!(matches!(typecheck(&d), Err(Error::TypeMismatch { slice: 1, .. })));
}

#[test]
fn named_diagram_signatures() {
    let sig = |n: DiagramName| {
        let d = named_diagram(n);
        let t = typecheck(&d).unwrap();
        (t.first().unwrap().clone(), t.last().unwrap().clone())
    };
    assert_eq!(sig(DiagramName::CoendCounit), (wires("x~ x"), vec![]));
    assert_eq!(sig(DiagramName::PairingOmega), (wires("x~ x y~ y"), vec![]));
    assert_eq!(sig(DiagramName::Drinfeld), (wires("x~ x"), wires("y y~")));
    assert_eq!(sig(DiagramName::CoendMult), (wires("x~ x y~ y"), wires("y~ x~ x y")));
    assert_eq!(sig(DiagramName::CoendComult), (wires("x~ x"), wires("x~ x x~ x")));
    assert_eq!(sig(DiagramName::CoendAntipode), (wires("x~ x"), wires("x~~ x~")));
    assert_eq!(sig(DiagramName::TauV), (wires("x~ x v"), wires("v x~ x")));
    assert_eq!(sig(DiagramName::CoendAction), (wires("x~ x y"), wires("y")));
    for n in DiagramName::ALL {
        assert_eq!(DiagramName::parse(n.as_str()), Some(n));
    }
}

#[test]
fn named_diagrams_round_trip_through_text() {
    for n in DiagramName::ALL {
        let d = named_diagram(n);
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d, "{}", n.as_str());
    }
}

#[test]
fn parse_errors_carry_positions() {
    match parse_diagram("id(x)\nid(x), frob(x)") {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 8)),
        other => panic!("{other:?}"),
    }
    match parse_diagram("braid(x y)") {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (1, 10)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_diagram("id(x) id(y)"), Err(Error::Parse { line: 1, col: 7, .. })));
}

#[test]
fn snakes_evaluate_to_identity() {
    let (p, r) = sweedler_setup();
    let left = parse_diagram("coev(x), id(x)\nid(x), ev(x)").unwrap();
    let right = parse_diagram("id(x~), coev(x)\nev(x), id(x~)").unwrap();
    for m in [regular_module(&p), two_dim(&p), character(&p, -1)] {
        let b = bind(&[("x", &m)]);
        assert!(evaluate(&left, &b, &no_boxes(), &r).unwrap().is_identity());
        assert!(evaluate(&right, &b, &no_boxes(), &r).unwrap().is_identity());
    }
}

#[test]
fn braid_then_inverse_is_identity() {
    let (p, r) = sweedler_setup();
    // braid(x,y) : x y -> y x; braid_inverse(y,x) : y x -> x y
    let d = parse_diagram("braid(x, y)\nbraid_inverse(y, x)").unwrap();
    let b = bind(&[("x", &regular_module(&p)), ("y", &two_dim(&p))]);
    assert!(evaluate(&d, &b, &no_boxes(), &r).unwrap().is_identity());
}

#[test]
fn binding_and_box_errors() {
    let p = Arc::new(group_algebra(&FiniteGroup::cyclic(2)));
    let r = RMatrix::trivial(&p);
    let reg = regular_module(&p);
    let d = parse_diagram("braid(x, y)").unwrap();
    let e = evaluate(&d, &bind(&[("x", &reg)]), &no_boxes(), &r).unwrap_err();
    assert_eq!(e, Error::UnboundSymbol("y".into()));

    let d = parse_diagram("box(f: x -> x)").unwrap();
    let b = bind(&[("x", &reg)]);
    assert_eq!(evaluate(&d, &b, &no_boxes(), &r).unwrap_err(), Error::UnboundSymbol("f".into()));
    let mut boxes = HashMap::new();
    boxes.insert("f".to_string(), ExactMatrix::identity(3));
    assert!(matches!(evaluate(&d, &b, &boxes, &r), Err(Error::ShapeMismatch(_))));
    boxes.insert("f".to_string(), ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]));
    assert_eq!(evaluate(&d, &b, &boxes, &r).unwrap(), boxes["f"]);
}

#[test]
fn crossing_with_unit_wire_is_identity() {
    let (p, r) = sweedler_setup();
    let d = parse_diagram("braid(x, 1)").unwrap();
    let b = bind(&[("x", &two_dim(&p))]);
    assert!(evaluate(&d, &b, &no_boxes(), &r).unwrap().is_identity());
}

#[test]
fn yang_baxter() {
    let (p, r) = sweedler_setup();
    let lhs = parse_diagram("braid(x, y), id(z)\nid(y), braid(x, z)\nbraid(y, z), id(x)").unwrap();
    let rhs = parse_diagram("id(x), braid(y, z)\nbraid(x, z), id(y)\nid(z), braid(x, y)").unwrap();
    let mods = [two_dim(&p), character(&p, -1), character(&p, 1)];
    for a in &mods {
        for b in &mods {
            for c in &mods {
                let bd = bind(&[("x", a), ("y", b), ("z", c)]);
                assert_eq!(
                    evaluate(&lhs, &bd, &no_boxes(), &r).unwrap(),
                    evaluate(&rhs, &bd, &no_boxes(), &r).unwrap()
                );
            }
        }
    }
    let (d, rd) = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)));
    let d = Arc::new(d);
    let m = trivial_module(&d);
    let reg = regular_module(&d);
    let bd = bind(&[("x", &reg), ("y", &m), ("z", &reg)]);
    assert_eq!(evaluate(&lhs, &bd, &no_boxes(), &rd).unwrap(), evaluate(&rhs, &bd, &no_boxes(), &rd).unwrap());
}

fn random_box(rows: usize, cols: usize, seed: &[i64]) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |i, j| Scalar::from_int(seed[(i * cols + j) % seed.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn interchange(seed_f in prop::collection::vec(-2i64..=2, 1..12), seed_g in prop::collection::vec(-2i64..=2, 1..12)) {
        let (p, r) = sweedler_setup();
        let (x, y) = (two_dim(&p), regular_module(&p));
        let mut boxes = HashMap::new();
        boxes.insert("f".to_string(), random_box(2, 2, &seed_f));
        boxes.insert("g".to_string(), random_box(4, 4, &seed_g));
        let b = bind(&[("x", &x), ("y", &y)]);
        let fg = parse_diagram("box(f: x -> x), id(y)\nid(x), box(g: y -> y)").unwrap();
        let gf = parse_diagram("id(x), box(g: y -> y)\nbox(f: x -> x), id(y)").unwrap();
        let both = parse_diagram("box(f: x -> x), box(g: y -> y)").unwrap();
        let a = evaluate(&fg, &b, &boxes, &r).unwrap();
        prop_assert_eq!(&a, &evaluate(&gf, &b, &boxes, &r).unwrap());
        prop_assert_eq!(&a, &evaluate(&both, &b, &boxes, &r).unwrap());
    }

    #[test]
    fn slicing_refinement(which in 0usize..8) {
        let (p, r) = sweedler_setup();
        let name = DiagramName::ALL[which];
        let d = named_diagram(name);
        let types = typecheck(&d).unwrap();
        // split every slice into one slice per non-identity generator
        let mut refined = Vec::new();
        for (k, slice) in d.slices.iter().enumerate() {
            let mut current = types[k].clone();
            let mut offset = 0;
            for g in slice {
                let gin = g.input();
                let gout = g.output();
                let mut s = Vec::new();
                if offset > 0 {
                    s.push(Generator::Id(current[..offset].to_vec()));
                }
                s.push(g.clone());
                if offset + gin.len() < current.len() {
                    s.push(Generator::Id(current[offset + gin.len()..].to_vec()));
                }
                refined.push(s);
                current.splice(offset..offset + gin.len(), gout.iter().cloned());
                offset += gout.len();
            }
        }
        let d2 = Diagram { input: d.input.clone(), output: d.output.clone(), slices: refined };
        let m = two_dim(&p);
        let b = bind(&[("x", &m), ("y", &m), ("v", &m)]);
        prop_assert_eq!(evaluate(&d, &b, &no_boxes(), &r).unwrap(), evaluate(&d2, &b, &no_boxes(), &r).unwrap());
    }
}
