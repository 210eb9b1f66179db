//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p braidcheck --test acceptance`. All comparisons are
//! exact; the only tolerances are the wall-clock budgets below.

use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use braidcheck::azumaya::{is_azumaya, AlgebraPresentation, AlgebraTensors};
use braidcheck::coend::{build_coend, invertibility_report};
use braidcheck::exact::{CycloScalar, ExactMatrix, SparseMatrix};
use braidcheck::group::FiniteGroup;
use braidcheck::hopf::{
    drinfeld_double, drinfeld_map_closed, dual_group_algebra, group_algebra, integrals, is_factorizable, sweedler,
    uq_sl2, verify_hopf, verify_quasitriangular, HopfPresentation, RMatrix,
};
use braidcheck::modular::{
    deligne_product, double_modular_data, is_nondegenerate_modular, muger_center, relabeling, reverse_data, semion,
    symmetric_rep_z2, trivial_data, ModularData,
};
use braidcheck::rep::{module_from_generators, small_modules, HModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AXIOM_BUDGET: Duration = Duration::from_secs(60);
const UQ_BUDGET: Duration = Duration::from_secs(600);
const MODULAR_BUDGET: Duration = Duration::from_secs(30);
const AZUMAYA_BUDGET: Duration = Duration::from_secs(60);
const RANDOM_ALGEBRAS: usize = 200;
const RANDOM_SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("{what} took {:.1}s, budget {}s", t.as_secs_f32(), budget.as_secs()))
}

struct Member {
    name: String,
    p: Arc<HopfPresentation>,
    r: RMatrix,
    expect_invertible: bool,
}

fn member(name: String, p: HopfPresentation, r: RMatrix, expect_invertible: bool) -> Member {
    Member { name, p: Arc::new(p), r, expect_invertible }
}

/// The suite without `u_q(sl2)`: group algebras and their duals for
/// `2 ≤ n ≤ 6` with `R = 1⊗1`, Sweedler's algebra for `λ ∈ {0, 1, 2}`, and
/// the double of each.
fn small_suite() -> Vec<Member> {
    let mut base = Vec::new();
    for n in 2..=6 {
        let g = FiniteGroup::cyclic(n);
        let p = group_algebra(&g);
        let r = RMatrix::trivial(&p);
        base.push(member(format!("k[Z{n}]"), p, r, false));
        let p = dual_group_algebra(&g);
        let r = RMatrix::trivial(&p);
        base.push(member(format!("k^Z{n}"), p, r, false));
    }
    for l in 0..3 {
        let (p, r) = sweedler(&CycloScalar::from_int(l));
        base.push(member(format!("Sweedler({l})"), p, r, false));
    }
    let doubles: Vec<Member> = base
        .iter()
        .map(|m| {
            let (d, r) = drinfeld_double(&m.p);
            member(format!("D({})", m.name), d, r, true)
        })
        .collect();
    base.extend(doubles);
    base
}

fn uq3() -> Member {
    let (p, r) = uq_sl2(3).expect("l = 3 is supported");
    member("u_q(sl2) l=3".into(), p, r, true)
}

fn uq_two_dimensional(p: &Arc<HopfPresentation>) -> Result<HModule, String> {
    let q = CycloScalar::zeta(3);
    let k = ExactMatrix::from_rows(vec![
        vec![q.clone(), CycloScalar::zero()],
        vec![CycloScalar::zero(), q.inv().expect("nonzero")],
    ])
    .map_err(|e| e.to_string())?;
    // PBW indices: K = 1, F = 3, E = 9
    let gens = [
        (1, k),
        (3, ExactMatrix::from_int_rows(&[&[0, 0], &[1, 0]])),
        (9, ExactMatrix::from_int_rows(&[&[0, 1], &[0, 0]])),
    ];
    module_from_generators(p, 2, &gens).map_err(|e| e.to_string())
}

fn axioms_of(m: &Member) -> Result<(), String> {
    let h = verify_hopf(&m.p);
    ensure(h.all_passed(), || format!("{}: {:?}", m.name, h.first_failure()))?;
    let q = verify_quasitriangular(&m.p, &m.r).map_err(|e| format!("{}: {e}", m.name))?;
    ensure(q.all_passed(), || format!("{}: {:?}", m.name, q.first_failure()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let suite = small_suite();
    for m in &suite {
        axioms_of(m)?;
    }
    within(start, AXIOM_BUDGET, "small suite")?;
    let small = start.elapsed();
    let start = Instant::now();
    axioms_of(&uq3())?;
    within(start, UQ_BUDGET, "u_q(sl2)")?;
    Ok(format!(
        "{} members + u_q(sl2) (small suite {:.1}s, u_q(sl2) {:.1}s)",
        suite.len(),
        small.as_secs_f32(),
        start.elapsed().as_secs_f32()
    ))
}

fn criterion_2() -> Outcome {
    let mut members = small_suite();
    members.push(uq3());
    for m in &members {
        let rep = invertibility_report(&m.p, &m.r).map_err(|e| format!("{}: {e}", m.name))?;
        ensure(rep.drinfeld_iso.holds == rep.omega_nondegenerate.holds, || format!("{}: criteria disagree", m.name))?;
        ensure(rep.verdict == m.expect_invertible, || {
            format!("{}: verdict {}, expected {}", m.name, rep.verdict, m.expect_invertible)
        })?;
        if m.name.starts_with("Sweedler") {
            let unimodular = integrals(&m.p).map_err(|e| e.to_string())?.unimodular;
            ensure(!unimodular, || format!("{}: unimodularity screen should fail", m.name))?;
        }
    }
    Ok(format!("{} members, both criteria agree with the expected verdicts", members.len()))
}

fn criterion_3() -> Outcome {
    let mut members = small_suite();
    members.push(uq3());
    let mut modules = 0;
    for m in &members {
        let c = build_coend(&m.p, &m.r).map_err(|e| format!("{}: {e}", m.name))?;
        let dr = c.drinfeld_map_diagrammatic().map_err(|e| format!("{}: {e}", m.name))?;
        ensure(dr == drinfeld_map_closed(&m.p, &m.r), || format!("{}: Dr diagram differs from closed form", m.name))?;
        let axioms = c.verify();
        ensure(axioms.all_passed(), || format!("{}: coend {:?}", m.name, axioms.first_failure()))?;
        let mut ys = small_modules(&m.p).map_err(|e| e.to_string())?;
        if m.name.starts_with("u_q") {
            ys.push(uq_two_dimensional(&m.p)?);
        }
        let dr = SparseMatrix::from_dense(&dr);
        for y in ys.iter().filter(|y| y.dim() <= 2) {
            let induced = c.action_induced(y).map_err(|e| e.to_string())?;
            ensure(induced == c.end.iota(y).compose(&dr).to_dense(), || {
                format!("{}: action map on a dim-{} module differs from Dr", m.name, y.dim())
            })?;
            modules += 1;
        }
    }
    Ok(format!("{} members, {modules} modules of dim ≤ 2", members.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for n in [2, 3] {
        let g = FiniteGroup::cyclic(n);
        let data = double_modular_data(&g).map_err(|e| e.to_string())?;
        let nondeg = is_nondegenerate_modular(&data).map_err(|e| e.to_string())?;
        ensure(nondeg && muger_center(&data) == [0], || format!("D(Z{n}) modular data degenerate"))?;
        let (d, r) = drinfeld_double(&group_algebra(&g));
        let f = is_factorizable(&d, &r);
        ensure(f.factorizable, || format!("D(Z{n}) Hopf presentation not factorizable (rank {})", f.rank))?;
        // global dimension Σ d_x² of the modular data equals dim D(G)
        let dims = data.quantum_dimensions().ok_or("S₀ₓ vanishes")?;
        let global = dims.iter().fold(CycloScalar::zero(), |acc, x| &acc + &(x * x));
        ensure(global == CycloScalar::from_int(d.dim() as i64), || format!("D(Z{n}): global dimension {global} ≠ {}", d.dim()))?;
    }
    within(start, MODULAR_BUDGET, "criterion 4")?;
    Ok("D(Z2), D(Z3): modular data and Hopf presentation both non-degenerate".into())
}

fn fixtures() -> Result<Vec<(&'static str, ModularData)>, String> {
    let dbl = |n| double_modular_data(&FiniteGroup::cyclic(n)).map_err(|e| e.to_string());
    Ok(vec![
        ("trivial", trivial_data()),
        ("Rep(Z2)", symmetric_rep_z2()),
        ("semion", semion()),
        ("D(Z2)", dbl(2)?),
        ("D(Z3)", dbl(3)?),
        ("D(S3)", double_modular_data(&FiniteGroup::symmetric(3)).map_err(|e| e.to_string())?),
    ])
}

fn same_up_to_labels(a: &ModularData, b: &ModularData) -> bool {
    relabeling(a, b).is_some()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let f = fixtures()?;
    let nondeg = |d: &ModularData| is_nondegenerate_modular(d).map_err(|e| e.to_string());
    let unit = trivial_data();
    let mut pairs = 0;
    let mut triples = 0;
    for (na, a) in &f {
        let rev = reverse_data(a).map_err(|e| e.to_string())?;
        ensure(reverse_data(&rev).map_err(|e| e.to_string())? == *a, || format!("reverse not an involution on {na}"))?;
        ensure(nondeg(&rev)? == nondeg(a)?, || format!("reverse changes non-degeneracy of {na}"))?;
        ensure(same_up_to_labels(&deligne_product(&unit, a), a), || format!("1⊠{na} ≠ {na}"))?;
        ensure(same_up_to_labels(&deligne_product(a, &unit), a), || format!("{na}⊠1 ≠ {na}"))?;
        for (nb, b) in &f {
            let ab = deligne_product(a, b);
            ensure(nondeg(&ab)? == (nondeg(a)? && nondeg(b)?), || format!("{na}⊠{nb}: non-degeneracy"))?;
            ensure(same_up_to_labels(&ab, &deligne_product(b, a)), || format!("{na}⊠{nb} ≠ {nb}⊠{na}"))?;
            let rab = reverse_data(&ab).map_err(|e| e.to_string())?;
            let rarb = deligne_product(&reverse_data(a).map_err(|e| e.to_string())?, &reverse_data(b).map_err(|e| e.to_string())?);
            ensure(rab == rarb, || format!("reverse({na}⊠{nb}) ≠ reverse⊠reverse"))?;
            pairs += 1;
            for (nc, c) in &f {
                if a.rank() * b.rank() * c.rank() > 128 {
                    continue;
                }
                let left = deligne_product(&ab, c);
                let right = deligne_product(a, &deligne_product(b, c));
                ensure(same_up_to_labels(&left, &right), || format!("({na}⊠{nb})⊠{nc} ≠ {na}⊠({nb}⊠{nc})"))?;
                triples += 1;
            }
        }
    }
    within(start, MODULAR_BUDGET, "criterion 5")?;
    Ok(format!("{} fixtures, {pairs} pairs, {triples} triples of total rank ≤ 128", f.len()))
}

/// Upper triangular 2×2 matrices, basis E11, E12, E22.
fn upper_triangular() -> AlgebraPresentation {
    let one = CycloScalar::one;
    let mult = vec![(0, 0, 0, one()), (0, 1, 1, one()), (1, 2, 1, one()), (2, 2, 2, one())];
    let unit = vec![(0, one()), (2, one())];
    AlgebraPresentation::from_tensors(AlgebraTensors { dim: 3, field: 1, mult, unit }).expect("associative")
}

fn random_algebra(rng: &mut ChaCha8Rng) -> AlgebraPresentation {
    let q = |n: i64| CycloScalar::from_int(n);
    let base = match rng.gen_range(0..8) {
        0 => AlgebraPresentation::split(rng.gen_range(1..=4)),
        1 => AlgebraPresentation::matrix_algebra(2),
        2 => upper_triangular(),
        3 => {
            let g = match rng.gen_range(0..4) {
                0 => FiniteGroup::cyclic(2),
                1 => FiniteGroup::cyclic(3),
                2 => FiniteGroup::cyclic(4),
                _ => FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
            };
            AlgebraPresentation::group_algebra(&g)
        }
        4 | 5 => {
            let deg = rng.gen_range(1..=4);
            let c: Vec<CycloScalar> = (0..deg).map(|_| q(rng.gen_range(-2..=2))).collect();
            AlgebraPresentation::monogenic(&c).expect("monic polynomial")
        }
        6 => {
            let dual_numbers = AlgebraPresentation::monogenic(&[q(0), q(0)]).expect("x²");
            dual_numbers.direct_product(&AlgebraPresentation::split(rng.gen_range(1..=2)))
        }
        _ => {
            let gaussian = AlgebraPresentation::monogenic(&[q(1), q(0)]).expect("x² + 1");
            gaussian.direct_product(&AlgebraPresentation::split(rng.gen_range(1..=2)))
        }
    };
    let d = base.dim();
    loop {
        let p = ExactMatrix::from_fn(d, d, |_, _| q(rng.gen_range(-2..=2)));
        if p.rank() == d {
            return base.change_basis(&p).expect("invertible change of basis");
        }
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let q = |n: i64| CycloScalar::from_int(n);
    let mut named: Vec<(String, AlgebraPresentation, bool)> = Vec::new();
    for n in 1..=3 {
        named.push((format!("M{n}(Q)"), AlgebraPresentation::matrix_algebra(n), true));
    }
    named.push(("Q×Q".into(), AlgebraPresentation::split(2), false));
    named.push(("Q[x]/(x²)".into(), AlgebraPresentation::monogenic(&[q(0), q(0)]).map_err(|e| e.to_string())?, false));
    named.push(("Q(i)".into(), AlgebraPresentation::monogenic(&[q(1), q(0)]).map_err(|e| e.to_string())?, false));
    for n in 1..=5 {
        named.push((format!("Q[Z{n}]"), AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(n)), n == 1));
    }
    for (name, a, expect) in &named {
        let r = is_azumaya(a).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.route_agreement && r.verdict == *expect, || format!("{name}: verdict {}", r.verdict))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut positive = 0;
    for i in 0..RANDOM_ALGEBRAS {
        let a = random_algebra(&mut rng);
        let r = is_azumaya(&a).map_err(|e| format!("random sample {i}: {e}"))?;
        ensure(r.route_agreement, || format!("random sample {i}: routes disagree"))?;
        positive += usize::from(r.verdict);
    }
    within(start, AZUMAYA_BUDGET, "criterion 6")?;
    Ok(format!(
        "{} named algebras, {RANDOM_ALGEBRAS} random samples of dim ≤ 4 ({positive} Azumaya)",
        named.len()
    ))
}

fn criterion_7() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let float_types = [format!("f{}", 32), format!("f{}", 64)];
    let mut scanned = 0;
    for dir in ["src", "tests", "examples"] {
        for path in rust_files(&root.join(dir)) {
            let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
            for t in &float_types {
                let hit = text.match_indices(t.as_str()).any(|(i, _)| {
                    let before = text[..i].chars().next_back();
                    let after = text[i + t.len()..].chars().next();
                    !before.is_some_and(|c| c.is_alphanumeric() || c == '_')
                        && !after.is_some_and(|c| c.is_alphanumeric() || c == '_')
                });
                ensure(!hit, || format!("{} uses {t}", path.display()))?;
            }
            scanned += 1;
        }
    }
    let data = root.join("examples/data");
    let golden = root.join("tests/golden");
    let cases = [("report_dz3", "invertibility-report", "dz3.hopf"), ("factorizable_uq3", "factorizable", "uq3.hopf")];
    for (name, cmd, file) in cases {
        let mut runs = Vec::new();
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_braidcheck"))
                .args([cmd, file])
                .current_dir(&data)
                .env_remove("BRAIDCHECK_MAX_DIM")
                .output()
                .map_err(|e| e.to_string())?;
            runs.push(zero_duration(&String::from_utf8_lossy(&out.stdout)));
        }
        let want = std::fs::read_to_string(golden.join(format!("{name}.json"))).map_err(|e| e.to_string())?;
        ensure(runs[0] == runs[1], || format!("{cmd} {file}: two runs differ"))?;
        ensure(runs[0] == want, || format!("{cmd} {file}: report differs from golden file"))?;
    }
    Ok(format!("{scanned} source files free of floating point; golden reports byte-stable"))
}

fn zero_duration(report: &str) -> String {
    let lines: Vec<&str> = report
        .lines()
        .map(|l| if l.trim_start().starts_with("\"duration_ms\"") { "  \"duration_ms\": 0" } else { l })
        .collect();
    lines.join("\n") + "\n"
}

fn rust_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    let Ok(entries) = std::fs::read_dir(dir) else { return out };
    for e in entries.flatten() {
        let p = e.path();
        if p.is_dir() {
            out.extend(rust_files(&p));
        } else if p.extension().is_some_and(|x| x == "rs") {
            out.push(p);
        }
    }
    out.sort();
    out
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 axiom suites", criterion_1),
        ("2 invertibility criteria agree", criterion_2),
        ("3 diagram fidelity", criterion_3),
        ("4 semisimple and Hopf verdicts agree", criterion_4),
        ("5 Witt monoid laws", criterion_5),
        ("6 Azumaya route agreement", criterion_6),
        ("7 exactness and determinism", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed().as_secs_f32();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{t:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{t:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
