//! The canonical coend `F` and end `E` of `Rep(H)`, realized on `H*` and `H`.
//!
//! `F` is `H*` with the coadjoint action and projections
//! `π_x(f⊗v)(h) = f(h·v)`. Every structure map is obtained by evaluating the
//! corresponding named diagram on the regular module and descending along
//! `π`: the diagram is evaluated on a section of `π` and the result is then
//! checked to factor through `π` on (a sample of) all inputs.

mod report;

pub use report::{invertibility_report, Criterion, CriterionReport, DescentRecord};

use std::collections::HashMap;
use std::sync::Arc;

use crate::axioms::AxiomReport;
use crate::diagrams::{named_diagram, DiagramName, Evaluator};
use crate::error::{Error, Result};
use crate::exact::{Accumulator, ExactMatrix, SparseMatrix, SparseVec};
use crate::hopf::{
    adjoint_action, coadjoint_action, drinfeld_map_closed, monodromy_element, verify_quasitriangular, HopfPresentation,
    RMatrix,
};
use crate::rep::{
    braiding_sparse, dual_module, is_intertwiner, regular_module, tensor_module, trivial_module, verify_module,
    HModule,
};

/// Inputs up to this many basis vectors are checked exhaustively during descent.
pub const DESCENT_FULL_LIMIT: usize = 20_000;
/// Number of basis vectors checked when the input space is larger.
pub const DESCENT_SAMPLE: usize = 4_096;

pub const CONVENTIONS: [(&str, &str); 5] = [
    ("coadjoint action", "(h·φ)(k) = φ(S(h₁) k h₂)"),
    ("projection", "π_x(f⊗v)(h) = f(h·v)"),
    ("crossings", "over-strand from lower left to upper right = braid"),
    ("pairing", "ω(φ, ψ) = (φ ⊗ ψ∘S)(R₂₁R)"),
    ("bialgebra braiding", "Δm = (m⊗m)(id⊗σ_{F,F}⊗id)(Δ⊗Δ)"),
];

/// `π_Z: Z^∨⊗Z -> H*` as a `dim H × (dim Z)²` matrix.
pub fn coend_projection(z: &HModule) -> SparseMatrix {
    let (d, n) = (z.parent().dim(), z.dim());
    let mut cols: Vec<Accumulator> = (0..n * n).map(|_| Accumulator::new()).collect();
    for h in 0..d {
        for j in 0..n {
            for (i, c) in z.action(h).column(j).iter() {
                cols[i * n + j].add(h, c.clone());
            }
        }
    }
    SparseMatrix::from_columns(d, cols.into_iter().map(Accumulator::finish).collect())
}

/// `H` with the adjoint action, standing in for `E = ∫_x x⊗x^∨`.
#[derive(Clone, Debug)]
pub struct EndRealization {
    pub carrier: HModule,
}

impl EndRealization {
    pub fn new(p: &Arc<HopfPresentation>) -> Result<Self> {
        let carrier = HModule::new(p.clone(), p.dim(), adjoint_action(p))?;
        if !verify_module(&carrier) {
            return Err(Error::InternalInconsistency("adjoint action is not a module".into()));
        }
        Ok(EndRealization { carrier })
    }

    /// `ι_y: E -> y⊗y^∨`, `k ↦ ρ_y(k)`.
    pub fn iota(&self, y: &HModule) -> SparseMatrix {
        let m = y.dim();
        let cols = (0..self.carrier.dim())
            .map(|k| {
                let rho = y.action(k);
                let mut acc = Accumulator::new();
                for e in 0..m {
                    for (c, x) in rho.column(e).iter() {
                        acc.add(c * m + e, x.clone());
                    }
                }
                acc.finish()
            })
            .collect();
        SparseMatrix::from_columns(m * m, cols)
    }
}

enum Slot {
    Coend,
    Plain(usize),
}

/// `F` with its Hopf structure in `Rep(H)`.
#[derive(Clone, Debug)]
pub struct CoendRealization {
    pub carrier: HModule,
    pub end: EndRealization,
    regular: HModule,
    r: RMatrix,
    /// `π` on the regular module.
    pub pi_regular: SparseMatrix,
    section: Vec<SparseVec>,
    pub unit: SparseMatrix,
    pub mult: SparseMatrix,
    pub comult: SparseMatrix,
    pub counit: SparseMatrix,
    pub antipode: SparseMatrix,
    pub descent: Vec<DescentRecord>,
}

/// Builds `F`, descends every structure map and checks all invariants.
///
/// `R` must pass [`verify_quasitriangular`]; otherwise `Validation` names the failing axiom.
pub fn build_coend(p: &Arc<HopfPresentation>, r: &RMatrix) -> Result<CoendRealization> {
    if let Some(f) = verify_quasitriangular(p, r)?.first_failure() {
        return Err(Error::Validation(f.name.clone()));
    }
    let c = CoendRealization::descend_structure(p, r)?;
    let rep = c.verify();
    if let Some(f) = rep.first_failure() {
        return Err(Error::InternalInconsistency(format!("coend invariant '{}' fails", f.name)));
    }
    Ok(c)
}

impl CoendRealization {
    /// Builds `F` without running [`CoendRealization::verify`].
    pub fn descend_structure(p: &Arc<HopfPresentation>, r: &RMatrix) -> Result<Self> {
        let d = p.dim();
        let carrier = HModule::new(p.clone(), d, coadjoint_action(p))?;
        let regular = regular_module(p);
        let pi_regular = coend_projection(&regular);
        // π(e^k ⊗ 1)(h) = e^k(h), so e^k ↦ e^k⊗1 is a section
        let section = (0..d).map(|k| SparseVec::basis(k).kron(p.unit(), d)).collect();
        let unit = coend_projection(&trivial_module(p));
        let empty = SparseMatrix::identity(0);
        let mut c = CoendRealization {
            carrier,
            end: EndRealization::new(p)?,
            regular,
            r: r.clone(),
            pi_regular,
            section,
            unit,
            mult: empty.clone(),
            comult: empty.clone(),
            counit: empty.clone(),
            antipode: empty,
            descent: Vec::new(),
        };

        let pi = c.pi_regular.clone();
        let eval = c.evaluator(DiagramName::CoendComult, &[])?;
        c.comult = c.descend("comult", &eval, &[Slot::Coend], d * d, &|v| pi.apply_block(&pi.apply_block(v, 1), d))?;

        let eval = c.evaluator(DiagramName::CoendCounit, &[])?;
        c.counit = c.descend("counit", &eval, &[Slot::Coend], 1, &|v| v.clone())?;

        let pi_dual = coend_projection(&dual_module(&c.regular));
        let eval = c.evaluator(DiagramName::CoendAntipode, &[])?;
        c.antipode = c.descend("antipode", &eval, &[Slot::Coend], d, &|v| pi_dual.apply(v))?;

        // output wires y~ x~ x y are read as (x⊗y)^∨ ⊗ (x⊗y)
        let pi_xy = coend_projection(&tensor_module(&c.regular, &c.regular)?);
        let reorder = |v: &SparseVec| {
            let mut acc = Accumulator::new();
            for (i, x) in v.iter() {
                let (g, f, a, b) = (i / (d * d * d), (i / (d * d)) % d, (i / d) % d, i % d);
                acc.add((f * d + g) * d * d + a * d + b, x.clone());
            }
            pi_xy.apply(&acc.finish())
        };
        let eval = c.evaluator(DiagramName::CoendMult, &[])?;
        c.mult = c.descend("mult", &eval, &[Slot::Coend, Slot::Coend], d, &reorder)?;
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn parent(&self) -> &Arc<HopfPresentation> {
        self.carrier.parent()
    }

    pub fn r_matrix(&self) -> &RMatrix {
        &self.r
    }

    /// `x` (and `y`, `v` unless overridden) bound to the regular module.
    fn evaluator(&self, name: DiagramName, extra: &[(&str, &HModule)]) -> Result<Evaluator> {
        let mut binding: HashMap<String, HModule> =
            ["x", "y", "v"].iter().map(|s| (s.to_string(), self.regular.clone())).collect();
        for (s, m) in extra {
            binding.insert(s.to_string(), (*m).clone());
        }
        Evaluator::new(&named_diagram(name), &binding, &HashMap::new(), &self.r)
    }

    /// Solves `G ∘ (π or id per slot) = out ∘ eval` for `G`, then checks it.
    fn descend(
        &mut self,
        name: &str,
        eval: &Evaluator,
        slots: &[Slot],
        out_dim: usize,
        out: &dyn Fn(&SparseVec) -> SparseVec,
    ) -> Result<SparseMatrix> {
        let d = self.dim();
        let down: Vec<usize> = slots.iter().map(|s| if let Slot::Plain(n) = s { *n } else { d }).collect();
        let up: Vec<usize> = slots.iter().map(|s| if let Slot::Plain(n) = s { *n } else { d * d }).collect();
        let split = |mut i: usize, dims: &[usize]| {
            let mut parts = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                parts[k] = i % dims[k];
                i /= dims[k];
            }
            parts
        };

        let n_down: usize = down.iter().product();
        let cols = (0..n_down)
            .map(|j| {
                let mut v = SparseVec::basis(0);
                for (k, part) in split(j, &down).into_iter().enumerate() {
                    let piece = match slots[k] {
                        Slot::Coend => self.section[part].clone(),
                        Slot::Plain(_) => SparseVec::basis(part),
                    };
                    v = v.kron(&piece, up[k]);
                }
                out(&eval.apply(&v))
            })
            .collect();
        let g = SparseMatrix::from_columns(out_dim, cols);

        let n_up: usize = up.iter().product();
        let sample: Vec<usize> = if n_up <= DESCENT_FULL_LIMIT {
            (0..n_up).collect()
        } else {
            const STRIDE: usize = 1_000_003;
            (0..DESCENT_SAMPLE).map(|k| (k * STRIDE) % n_up).collect()
        };
        for &i in &sample {
            let lhs = out(&eval.apply(&SparseVec::basis(i)));
            let mut projected = SparseVec::basis(i);
            let mut suffix = 1;
            for k in (0..slots.len()).rev() {
                if let Slot::Coend = slots[k] {
                    projected = self.pi_regular.apply_block(&projected, suffix);
                }
                suffix *= down[k];
            }
            if g.apply(&projected) != lhs {
                return Err(Error::DescentFailure(format!("{name} does not factor through π at input {i}")));
            }
        }
        self.descent.push(DescentRecord { map: name.to_string(), checked: sample.len(), total: n_up });
        Ok(g)
    }

    /// Every invariant of the realization: intertwiners, surjectivity of
    /// `π_regular`, and the braided Hopf algebra axioms.
    pub fn verify(&self) -> AxiomReport {
        let d = self.dim();
        let f = &self.carrier;
        let mut rep = AxiomReport::new();
        rep.record_bool("F is a module", verify_module(f));
        let reg_pair = tensor_module(&dual_module(&self.regular), &self.regular).expect("same parent");
        rep.record_bool("π intertwines", is_intertwiner(&reg_pair, f, &self.pi_regular).unwrap_or(false));
        rep.record_bool("π surjective", self.pi_regular.to_dense().rank() == d);

        let ff = tensor_module(f, f).expect("same parent");
        let triv = trivial_module(self.parent());
        let inter = |x: &HModule, y: &HModule, t: &SparseMatrix| is_intertwiner(x, y, t).unwrap_or(false);
        rep.record_bool("m intertwines", inter(&ff, f, &self.mult));
        rep.record_bool("Δ intertwines", inter(f, &ff, &self.comult));
        rep.record_bool("ε intertwines", inter(f, &triv, &self.counit));
        rep.record_bool("η intertwines", inter(&triv, f, &self.unit));
        rep.record_bool("S intertwines", inter(f, f, &self.antipode));
        rep.extend(self.hopf_axioms());
        rep
    }

    fn hopf_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let (m, delta, eps, eta, s) = (&self.mult, &self.comult, &self.counit, &self.unit, &self.antipode);
        let sigma = braiding_sparse(&self.carrier, &self.carrier, &self.r).expect("same parent");
        let run = |v: SparseVec, steps: &[(&SparseMatrix, usize)]| {
            steps.iter().fold(v, |v, (map, suffix)| map.apply_block(&v, *suffix))
        };
        let mut rep = AxiomReport::new();

        let witness = |n: usize, ok: &dyn Fn(SparseVec) -> bool| (0..n).find(|&i| !ok(SparseVec::basis(i))).map(|i| vec![i]);
        rep.record(
            "associativity",
            witness(d * d * d, &|v| run(v.clone(), &[(m, d), (m, 1)]) == run(v, &[(m, 1), (m, 1)])),
        );
        rep.record(
            "unitality",
            witness(d, &|v| run(v.clone(), &[(eta, d), (m, 1)]) == v && run(v.clone(), &[(eta, 1), (m, 1)]) == v),
        );
        rep.record(
            "coassociativity",
            witness(d, &|v| run(v.clone(), &[(delta, 1), (delta, d)]) == run(v, &[(delta, 1), (delta, 1)])),
        );
        rep.record(
            "counitality",
            witness(d, &|v| run(v.clone(), &[(delta, 1), (eps, d)]) == v && run(v.clone(), &[(delta, 1), (eps, 1)]) == v),
        );
        rep.record(
            "bialgebra",
            witness(d * d, &|v| {
                let lhs = run(v.clone(), &[(m, 1), (delta, 1)]);
                let rhs = run(v, &[(delta, 1), (delta, d * d), (&sigma, d), (m, 1), (m, d)]);
                lhs == rhs
            }),
        );
        rep.record("counit multiplicativity", witness(d * d, &|v| run(v.clone(), &[(m, 1), (eps, 1)]) == run(v, &[(eps, 1), (eps, 1)])));
        let one = SparseVec::basis(0);
        rep.record_bool("unit comultiplicativity", run(one.clone(), &[(eta, 1), (delta, 1)]) == run(one.clone(), &[(eta, 1), (eta, 1)]));
        rep.record_bool("ε∘η = 1", run(one.clone(), &[(eta, 1), (eps, 1)]) == one);
        rep.record(
            "antipode",
            witness(d, &|v| {
                let target = run(v.clone(), &[(eps, 1), (eta, 1)]);
                run(v.clone(), &[(delta, 1), (s, d), (m, 1)]) == target && run(v, &[(delta, 1), (s, 1), (m, 1)]) == target
            }),
        );
        rep
    }

    /// Checks that each one-input structure map also arises from `z` through
    /// `π_z` (dinaturality, sampled on `z`).
    pub fn check_dinatural(&self, z: &HModule) -> Result<AxiomReport> {
        let pi_z = coend_projection(z);
        let mut binding: HashMap<String, HModule> = HashMap::new();
        binding.insert("x".into(), z.clone());
        binding.insert("y".into(), self.regular.clone());
        let boxes = HashMap::new();
        let eval = |name| Evaluator::new(&named_diagram(name), &binding, &boxes, &self.r);
        let n = z.dim();
        let mut rep = AxiomReport::new();
        let pair = tensor_module(&dual_module(z), z)?;
        rep.record_bool("π_z intertwines", is_intertwiner(&pair, &self.carrier, &pi_z)?);

        let counit = eval(DiagramName::CoendCounit)?.to_sparse();
        rep.record_bool("counit", counit == self.counit.compose(&pi_z));

        let comult = eval(DiagramName::CoendComult)?;
        let ok = (0..n * n).all(|i| {
            let raw = comult.apply(&SparseVec::basis(i));
            pi_z.apply_block(&pi_z.apply_block(&raw, 1), self.dim()) == self.comult.apply(pi_z.column(i))
        });
        rep.record_bool("comult", ok);

        let pi_dual = coend_projection(&dual_module(z));
        let antipode = eval(DiagramName::CoendAntipode)?;
        let ok = (0..n * n).all(|i| pi_dual.apply(&antipode.apply(&SparseVec::basis(i))) == self.antipode.apply(pi_z.column(i)));
        rep.record_bool("antipode", ok);

        let drinfeld = eval(DiagramName::Drinfeld)?;
        let dr = SparseMatrix::from_dense(&self.drinfeld_map_diagrammatic()?);
        let iota = self.end.iota(&self.regular);
        let ok = (0..n * n).all(|i| drinfeld.apply(&SparseVec::basis(i)) == iota.apply(&dr.apply(pi_z.column(i))));
        rep.record_bool("drinfeld", ok);
        Ok(rep)
    }

    /// `ω` as a `d×d` matrix with `ω[k][l] = ω(e^k, e^l)`.
    pub fn hopf_pairing(&self) -> Result<ExactMatrix> {
        let mut scratch = self.clone();
        let eval = self.evaluator(DiagramName::PairingOmega, &[])?;
        let g = scratch.descend("pairing", &eval, &[Slot::Coend, Slot::Coend], 1, &|v| v.clone())?;
        let d = self.dim();
        let omega = ExactMatrix::from_fn(d, d, |k, l| g.column(k * d + l).get(0));
        let closed = pairing_closed(self.parent(), &self.r);
        if omega != closed {
            return Err(Error::ConventionMismatch("diagrammatic ω differs from (φ⊗ψ∘S)(R₂₁R)".into()));
        }
        Ok(omega)
    }

    /// The raw Drinfeld diagram, descended along `π`: `F -> y⊗y^∨` with `y` regular.
    fn drinfeld_raw(&self) -> Result<SparseMatrix> {
        let mut scratch = self.clone();
        let eval = self.evaluator(DiagramName::Drinfeld, &[])?;
        let d = self.dim();
        scratch.descend("drinfeld", &eval, &[Slot::Coend], d * d, &|v| v.clone())
    }

    /// `Dr: F -> E`, read off through `ι` on the regular module and compared
    /// with [`drinfeld_map_closed`].
    pub fn drinfeld_map_diagrammatic(&self) -> Result<ExactMatrix> {
        let d = self.dim();
        let raw = self.drinfeld_raw()?;
        let iota = self.end.iota(&self.regular);
        let unit = self.parent().unit();
        let mut dr = ExactMatrix::zeros(d, d);
        for k in 0..d {
            // ρ(h)·1 = h recovers h from its image
            let mut acc = Accumulator::new();
            for (i, x) in raw.column(k).iter() {
                let u = unit.get(i % d);
                if !u.is_zero() {
                    acc.add(i / d, x * &u);
                }
            }
            let h = acc.finish();
            if &iota.apply(&h) != raw.column(k) {
                return Err(Error::DescentFailure("Drinfeld diagram does not land in the end".into()));
            }
            for (i, x) in h.iter() {
                dr.set(*i, k, x.clone());
            }
        }
        if dr != drinfeld_map_closed(self.parent(), &self.r) {
            return Err(Error::ConventionMismatch("diagrammatic Drinfeld map differs from (f⊗id)(R₂₁R)".into()));
        }
        Ok(dr)
    }

    /// The action `F⊗y -> y` as a `dim y × (d·dim y)` matrix.
    pub fn action_map(&self, y: &HModule) -> Result<ExactMatrix> {
        if !verify_module(y) {
            return Err(Error::Validation("module relations".into()));
        }
        let mut scratch = self.clone();
        let eval = self.evaluator(DiagramName::CoendAction, &[("y", y)])?;
        Ok(scratch.descend("action", &eval, &[Slot::Coend, Slot::Plain(y.dim())], y.dim(), &|v| v.clone())?.to_dense())
    }

    /// The map `F -> y⊗y^∨` induced by [`CoendRealization::action_map`].
    pub fn action_induced(&self, y: &HModule) -> Result<ExactMatrix> {
        let a = self.action_map(y)?;
        let m = y.dim();
        Ok(ExactMatrix::from_fn(m * m, self.dim(), |row, phi| a.get(row / m, phi * m + row % m).clone()))
    }

    /// `τ_V: F⊗V -> V⊗F`.
    pub fn tau_v(&self, v: &HModule) -> Result<ExactMatrix> {
        let mut scratch = self.clone();
        let eval = self.evaluator(DiagramName::TauV, &[("v", v)])?;
        let n = v.dim();
        let pi = self.pi_regular.clone();
        let g = scratch.descend("tau_V", &eval, &[Slot::Coend, Slot::Plain(n)], n * self.dim(), &|w| pi.apply_block(w, 1))?;
        Ok(g.to_dense())
    }
}

/// `ω(e^k, e^l) = (e^k ⊗ e^l∘S)(R₂₁R)`.
pub fn pairing_closed(p: &HopfPresentation, r: &RMatrix) -> ExactMatrix {
    let d = p.dim();
    let mut omega = ExactMatrix::zeros(d, d);
    for (idx, c) in monodromy_element(p, r).iter() {
        let (k, b) = (idx / d, idx % d);
        for (l, s) in p.antipode_of_basis(b).iter() {
            *omega.get_mut(k, *l) += &(c * s);
        }
    }
    omega
}
