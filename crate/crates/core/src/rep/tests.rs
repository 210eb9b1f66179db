use super::*;
use crate::group::FiniteGroup;
use crate::hopf::{drinfeld_double, group_algebra, sweedler};
use proptest::prelude::*;

fn arc(p: HopfPresentation) -> Arc<HopfPresentation> {
    Arc::new(p)
}

fn z2() -> Arc<HopfPresentation> {
    arc(group_algebra(&FiniteGroup::cyclic(2)))
}

fn sign(p: &Arc<HopfPresentation>) -> HModule {
    let m = |x: i64| ExactMatrix::from_int_rows(&[&[x]]);
    HModule::new(p.clone(), 1, vec![m(1), m(-1)]).unwrap()
}

/// One-dimensional Sweedler modules: `g ↦ s`, `x ↦ 0`.
fn sweedler_char(p: &Arc<HopfPresentation>, s: i64) -> HModule {
    let m = |x: i64| ExactMatrix::from_int_rows(&[&[x]]);
    HModule::new(p.clone(), 1, vec![m(1), m(s), m(0), m(0)]).unwrap()
}

fn sp(m: &ExactMatrix) -> SparseMatrix {
    SparseMatrix::from_dense(m)
}

fn id(n: usize) -> SparseMatrix {
    SparseMatrix::identity(n)
}

/// A family of (parent, R, modules of dimension ≤ 4).
fn families() -> Vec<(Arc<HopfPresentation>, RMatrix, Vec<HModule>)> {
    let p = z2();
    let r = RMatrix::trivial(&p);
    let mods = vec![trivial_module(&p), sign(&p), regular_module(&p)];
    let (s, rs) = sweedler(&Scalar::one());
    let s = arc(s);
    let smods = vec![trivial_module(&s), sweedler_char(&s, -1), regular_module(&s)];
    let (d, rd) = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)));
    let d = arc(d);
    let dmods = vec![trivial_module(&d), regular_module(&d), dual_module(&regular_module(&d))];
    vec![(p, r, mods), (s, rs, smods), (d, rd, dmods)]
}

#[test]
fn basic_modules_verify() {
    for (_, _, mods) in families() {
        for m in &mods {
            assert!(verify_module(m));
            assert!(verify_module(&dual_module(m)));
        }
    }
}

#[test]
fn corrupted_regular_module_fails() {
    let p = z2();
    let reg = regular_module(&p);
    let mut action: Vec<ExactMatrix> = (0..2).map(|h| reg.action_matrix(h)).collect();
    action[1].set(0, 0, Scalar::from_int(5));
    let bad = HModule::new(p, 2, action).unwrap();
    assert!(!verify_module(&bad));
}

#[test]
fn shape_errors() {
    let p = z2();
    assert!(matches!(HModule::new(p.clone(), 2, vec![ExactMatrix::identity(2)]), Err(Error::DimensionMismatch(_))));
    assert!(matches!(
        HModule::new(p, 2, vec![ExactMatrix::identity(2), ExactMatrix::identity(3)]),
        Err(Error::DimensionMismatch(_))
    ));
    let other = arc(sweedler(&Scalar::one()).0);
    assert_eq!(tensor_module(&regular_module(&z2()), &regular_module(&other)).unwrap_err(), Error::ParentMismatch);
}

#[test]
fn tensor_with_trivial_is_canonical() {
    for (p, _, mods) in families() {
        let one = trivial_module(&p);
        for x in &mods {
            let left = tensor_module(&one, x).unwrap();
            let right = tensor_module(x, &one).unwrap();
            for h in 0..p.dim() {
                assert_eq!(left.action(h), x.action(h));
                assert_eq!(right.action(h), x.action(h));
            }
        }
    }
}

#[test]
fn ev_and_coev_are_module_maps_and_snakes_hold() {
    for (p, _, mods) in families() {
        let one = trivial_module(&p);
        for x in &mods {
            let xd = dual_module(x);
            let n = x.dim();
            assert!(is_intertwiner(&tensor_module(&xd, x).unwrap(), &one, &ev(x)).unwrap());
            assert!(is_intertwiner(&one, &tensor_module(x, &xd).unwrap(), &coev(x)).unwrap());
            // x -> x⊗x^∨⊗x -> x
            let snake1 = id(n).kron(&ev(x)).compose(&coev(x).kron(&id(n)));
            assert!(snake1.is_identity());
            // x^∨ -> x^∨⊗x⊗x^∨ -> x^∨
            let snake2 = ev(x).kron(&id(n)).compose(&id(n).kron(&coev(x)));
            assert!(snake2.is_identity());
        }
    }
}

#[test]
fn trivial_r_gives_flip() {
    let p = z2();
    let r = RMatrix::trivial(&p);
    let reg = regular_module(&p);
    let b = braiding(&reg, &reg, &r).unwrap();
    let flip = ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    assert_eq!(b, flip);
    assert!(braiding(&trivial_module(&p), &reg, &r).unwrap().is_identity());
}

#[test]
fn braiding_with_trivial_is_identity_everywhere() {
    for (p, r, mods) in families() {
        let one = trivial_module(&p);
        for x in &mods {
            assert!(braiding(&one, x, &r).unwrap().is_identity());
            assert!(braiding(x, &one, &r).unwrap().is_identity());
        }
    }
}

#[test]
fn double_has_nontrivial_monodromy() {
    let (d, r) = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)));
    let d = arc(d);
    let reg = regular_module(&d);
    let c = braiding(&reg, &reg, &r).unwrap();
    assert!(!(&c * &c).is_identity());
}

#[test]
fn braiding_is_invertible_intertwiner() {
    for (_, r, mods) in families() {
        for x in &mods {
            for y in &mods {
                let b = braiding_sparse(x, y, &r).unwrap();
                let xy = tensor_module(x, y).unwrap();
                let yx = tensor_module(y, x).unwrap();
                assert!(is_intertwiner(&xy, &yx, &b).unwrap());
                // braid(x,y) then braid_inverse(y,x) is the identity on x⊗y
                let back = braiding_inverse_sparse(y, x, &r).unwrap();
                assert!(back.compose(&b).is_identity());
                assert!(b.compose(&back).is_identity());
            }
        }
    }
}

#[test]
fn hom_space_examples() {
    let p = z2();
    let one = trivial_module(&p);
    assert_eq!(hom_space(&one, &one).unwrap().len(), 1);
    assert_eq!(hom_space(&regular_module(&p), &one).unwrap().len(), 1);
    assert_eq!(hom_space(&sign(&p), &sign(&p)).unwrap().len(), 1);
    assert_eq!(hom_space(&sign(&p), &one).unwrap().len(), 0);
    assert_eq!(hom_space(&regular_module(&p), &regular_module(&p)).unwrap().len(), 2);
}

#[test]
fn hexagons() {
    for (_, r, mods) in families() {
        for x in &mods {
            for y in &mods {
                for z in &mods {
                    let (nx, ny, nz) = (x.dim(), y.dim(), z.dim());
                    let xy = tensor_module(x, y).unwrap();
                    let yz = tensor_module(y, z).unwrap();
                    // σ_{X⊗Y,Z} = (σ_{X,Z}⊗id_Y)(id_X⊗σ_{Y,Z})
                    let lhs = braiding_sparse(&xy, z, &r).unwrap();
                    let rhs = braiding_sparse(x, z, &r)
                        .unwrap()
                        .kron(&id(ny))
                        .compose(&id(nx).kron(&braiding_sparse(y, z, &r).unwrap()));
                    assert_eq!(lhs, rhs);
                    // σ_{X,Y⊗Z} = (id_Y⊗σ_{X,Z})(σ_{X,Y}⊗id_Z)
                    let lhs = braiding_sparse(x, &yz, &r).unwrap();
                    let rhs = id(ny)
                        .kron(&braiding_sparse(x, z, &r).unwrap())
                        .compose(&braiding_sparse(x, y, &r).unwrap().kron(&id(nz)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn combine(basis: &[ExactMatrix], coeffs: &[i64]) -> ExactMatrix {
    let mut t = ExactMatrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, c) in basis.iter().zip(coeffs) {
        t = &t + &b.scale(&Scalar::from_int(*c));
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn naturality(fam in 0usize..3, i in 0usize..3, j in 0usize..3, k in 0usize..3, coeffs in prop::collection::vec(-3i64..=3, 16)) {
        let (_, r, mods) = families().swap_remove(fam);
        let (x, x2, y) = (&mods[i], &mods[j], &mods[k]);
        let basis = hom_space(x, x2).unwrap();
        prop_assume!(!basis.is_empty());
        let t = sp(&combine(&basis, &coeffs[..basis.len()]));
        let lhs = braiding_sparse(x2, y, &r).unwrap().compose(&t.kron(&id(y.dim())));
        let rhs = id(y.dim()).kron(&t).compose(&braiding_sparse(x, y, &r).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_monodromy_is_trivial(i in 0usize..3, j in 0usize..3) {
        let p = z2();
        let r = RMatrix::trivial(&p);
        let mods = [trivial_module(&p), sign(&p), regular_module(&p)];
        let (x, y) = (&mods[i], &mods[j]);
        let mono = braiding_sparse(y, x, &r).unwrap().compose(&braiding_sparse(x, y, &r).unwrap());
        prop_assert!(mono.is_identity());
    }
}

#[test]
fn characters_of_small_examples() {
    use crate::hopf::{dual_group_algebra, uq_sl2};
    let count = |p: HopfPresentation| {
        let p = Arc::new(p);
        let chars = characters(&p).unwrap();
        assert!(chars.iter().all(verify_module));
        chars.len()
    };
    assert_eq!(count(group_algebra(&FiniteGroup::cyclic(4))), 4);
    assert_eq!(count(group_algebra(&FiniteGroup::symmetric(3))), 2);
    assert_eq!(count(dual_group_algebra(&FiniteGroup::cyclic(3))), 3);
    assert_eq!(count(sweedler(&Scalar::one()).0), 2);
    assert_eq!(count(drinfeld_double(&group_algebra(&FiniteGroup::cyclic(3))).0), 9);
    assert_eq!(count(uq_sl2(3).unwrap().0), 1);
}

#[test]
fn small_modules_are_modules() {
    let (s, _) = sweedler(&Scalar::one());
    let s = Arc::new(s);
    let mods = small_modules(&s).unwrap();
    assert!(mods.iter().all(verify_module));
    // trivial ⊕ χ for both characters, and H·x, H·gx
    assert_eq!(mods.iter().filter(|m| m.dim() == 2).count(), 4);
    let sum = direct_sum(&mods[0], &mods[1]).unwrap();
    assert_eq!(hom_space(&sum, &sum).unwrap().len(), 2);
}
