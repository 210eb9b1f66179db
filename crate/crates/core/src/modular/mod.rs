//! Modular data `(S, T)` of semisimple braided categories: verification,
//! transparent labels, non-degeneracy, Deligne products, reversal, and the
//! data of Drinfeld doubles of finite groups.

use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::exact::{CycloScalar, ExactMatrix};
use crate::group::{character_table, FiniteGroup};

type Scalar = CycloScalar;

/// Largest group accepted by [`double_modular_data`].
pub const DEFAULT_MAX_GROUP_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    labels: Vec<String>,
    s: ExactMatrix,
    /// diagonal of `T`
    t: Vec<Scalar>,
}

impl ModularData {
    /// Label 0 is the unit.
    pub fn new(labels: Vec<String>, s: ExactMatrix, t: ExactMatrix) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::ShapeMismatch("modular data needs at least the unit label".into()));
        }
        if s.rows() != r || s.cols() != r || t.rows() != r || t.cols() != r {
            return Err(Error::ShapeMismatch(format!(
                "{r} labels but S is {}×{} and T is {}×{}",
                s.rows(),
                s.cols(),
                t.rows(),
                t.cols()
            )));
        }
        let off_diagonal = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).find(|&(i, j)| i != j && !t.get(i, j).is_zero());
        if let Some((i, j)) = off_diagonal {
            return Err(Error::ShapeMismatch(format!("T has a nonzero off-diagonal entry at ({i},{j})")));
        }
        let t = (0..r).map(|i| t.get(i, i).clone()).collect();
        Ok(ModularData { labels, s, t })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn s(&self) -> &ExactMatrix {
        &self.s
    }

    pub fn t(&self) -> ExactMatrix {
        let r = self.rank();
        ExactMatrix::from_fn(r, r, |i, j| if i == j { self.t[i].clone() } else { Scalar::zero() })
    }

    pub fn t_diagonal(&self) -> &[Scalar] {
        &self.t
    }

    /// Quantum dimensions `d_x = S₀ₓ / S₀₀`; `None` if `S₀₀ = 0`.
    pub fn quantum_dimensions(&self) -> Option<Vec<Scalar>> {
        let s00 = self.s.get(0, 0).inv()?;
        Some((0..self.rank()).map(|x| self.s.get(0, x) * &s00).collect())
    }

    /// `N_{ab}^c = Σ_x S_{ax} S_{bx} (S⁻¹)_{xc} / S_{0x}`, indexed `[a][b][c]`.
    pub fn fusion_rules(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let r = self.rank();
        let inv = self.s.inverse()?;
        let s0: Vec<Scalar> = (0..r)
            .map(|x| self.s.get(0, x).inv().ok_or_else(|| Error::ShapeMismatch(format!("S[0][{x}] is zero"))))
            .collect::<Result<_>>()?;
        let mut n = vec![vec![vec![Scalar::zero(); r]; r]; r];
        for (a, na) in n.iter_mut().enumerate() {
            for (b, nab) in na.iter_mut().enumerate() {
                for x in 0..r {
                    let w = &(self.s.get(a, x) * self.s.get(b, x)) * &s0[x];
                    if w.is_zero() {
                        continue;
                    }
                    for (c, slot) in nab.iter_mut().enumerate() {
                        *slot += &(&w * inv.get(x, c));
                    }
                }
            }
        }
        Ok(n)
    }
}

fn is_nonnegative_integer(x: &Scalar) -> bool {
    x.as_rational().is_some_and(|q| q.is_integer() && !q.is_negative())
}

/// Shape-level invariants always; Verlinde integrality and duality when `S` is invertible.
pub fn verify_modular_data(d: &ModularData) -> AxiomReport {
    let r = d.rank();
    let s = &d.s;
    let mut rep = AxiomReport::new();
    let asym = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).find(|&(i, j)| s.get(i, j) != s.get(j, i));
    rep.record("S symmetric", asym.map(|(i, j)| vec![i, j]));
    rep.record("S₀ₓ nonzero", (0..r).find(|&x| s.get(0, x).is_zero()).map(|x| vec![x]));
    rep.record_bool("T₀₀ = 1", d.t[0].is_one());
    let invertible = s.rank() == r;
    rep.record_bool("S invertible", invertible);
    if !invertible || rep.passed("S₀ₓ nonzero") != Some(true) {
        return rep;
    }
    let n = match d.fusion_rules() {
        Ok(n) => n,
        Err(_) => {
            rep.record_bool("Verlinde integrality", false);
            return rep;
        }
    };
    let bad = (0..r * r * r).find(|&k| !is_nonnegative_integer(&n[k / (r * r)][(k / r) % r][k % r]));
    rep.record("Verlinde integrality", bad.map(|k| vec![k / (r * r), (k / r) % r, k % r]));
    if bad.is_none() {
        // N_{ab}^0 must be the permutation matrix of an involution a ↦ a*
        let dual: Vec<Option<usize>> = (0..r)
            .map(|a| {
                let ones: Vec<usize> = (0..r).filter(|&b| n[a][b][0].is_one()).collect();
                let zeros = (0..r).filter(|&b| n[a][b][0].is_zero()).count();
                (ones.len() == 1 && zeros == r - 1).then(|| ones[0])
            })
            .collect();
        let broken = (0..r).find(|&a| match dual[a] {
            Some(b) => dual[b] != Some(a),
            None => true,
        });
        rep.record("duality", broken.map(|a| vec![a]));
    }
    rep
}

/// Labels `x` with `S_{xy} S₀₀ = S₀ₓ S₀ᵧ` for every `y`.
pub fn muger_center(d: &ModularData) -> Vec<usize> {
    let r = d.rank();
    let s = &d.s;
    (0..r)
        .filter(|&x| (0..r).all(|y| s.get(x, y) * s.get(0, 0) == s.get(0, x) * s.get(0, y)))
        .collect()
}

/// `S` invertible, cross-checked against a trivial Müger center.
pub fn is_nondegenerate_modular(d: &ModularData) -> Result<bool> {
    let by_rank = d.s.rank() == d.rank();
    let by_center = muger_center(d) == [0];
    if by_rank != by_center {
        return Err(Error::InternalInconsistency(format!(
            "S has rank {} of {} but the Müger center is {:?}",
            d.s.rank(),
            d.rank(),
            muger_center(d)
        )));
    }
    Ok(by_rank)
}

/// `(S₁⊗S₂, T₁⊗T₂)` with labels `a⊠b`, first factor major.
pub fn deligne_product(a: &ModularData, b: &ModularData) -> ModularData {
    let labels = a.labels.iter().flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊠{y}"))).collect();
    let t = a.t.iter().flat_map(|x| b.t.iter().map(move |y| x * y)).collect();
    ModularData { labels, s: a.s.kron(&b.s), t }
}

/// The reverse braiding: complex-conjugate `S`, inverse `T`.
pub fn reverse_data(d: &ModularData) -> Result<ModularData> {
    let t = d
        .t
        .iter()
        .enumerate()
        .map(|(i, x)| x.inv().ok_or_else(|| Error::ShapeMismatch(format!("T[{i}] is zero"))))
        .collect::<Result<_>>()?;
    Ok(ModularData { labels: d.labels.clone(), s: d.s.conj(), t })
}

/// The rank-one data of `Vect`.
pub fn trivial_data() -> ModularData {
    ModularData { labels: vec!["1".into()], s: ExactMatrix::identity(1), t: vec![Scalar::one()] }
}

/// `Rep(ℤ/2)` with its symmetric braiding: `S = [[1,1],[1,1]]`, `T = 1`.
pub fn symmetric_rep_z2() -> ModularData {
    ModularData {
        labels: vec!["+".into(), "-".into()],
        s: ExactMatrix::from_int_rows(&[&[1, 1], &[1, 1]]),
        t: vec![Scalar::one(), Scalar::one()],
    }
}

/// The semion category: `S = (1/√2)[[1,1],[1,−1]]`, `T = diag(1, i)`.
pub fn semion() -> ModularData {
    let sqrt2 = &Scalar::zeta_pow(8, 1) + &Scalar::zeta_pow(8, 7);
    let c = &sqrt2 * &Scalar::frac(1, 2);
    let s = ExactMatrix::from_fn(2, 2, |i, j| if i == 1 && j == 1 { -c.clone() } else { c.clone() });
    ModularData { labels: vec!["1".into(), "s".into()], s, t: vec![Scalar::one(), Scalar::zeta(4)] }
}

/// A permutation `p` fixing the unit with `S_b[p i][p j] = S_a[i][j]` and
/// `T_b[p i] = T_a[i]`, if one exists.
pub fn relabeling(a: &ModularData, b: &ModularData) -> Option<Vec<usize>> {
    let r = a.rank();
    if b.rank() != r || a.t[0] != b.t[0] || a.s.get(0, 0) != b.s.get(0, 0) {
        return None;
    }
    fn extend(a: &ModularData, b: &ModularData, p: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = p.len();
        if i == a.rank() {
            return true;
        }
        for j in 0..b.rank() {
            if used[j] || a.t[i] != b.t[j] {
                continue;
            }
            if (0..i).chain([i]).all(|k| {
                let pk = if k == i { j } else { p[k] };
                a.s.get(i, k) == b.s.get(j, pk)
            }) {
                p.push(j);
                used[j] = true;
                if extend(a, b, p, used) {
                    return true;
                }
                p.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut p = vec![0];
    let mut used = vec![false; r];
    used[0] = true;
    extend(a, b, &mut p, &mut used).then_some(p)
}

pub fn double_modular_data(g: &FiniteGroup) -> Result<ModularData> {
    double_modular_data_bounded(g, DEFAULT_MAX_GROUP_ORDER)
}

/// Modular data of `D(G)`: labels `(a, α)` with `a` a class representative
/// and `α` an irreducible character of `C(a)`;
/// `S = 1/(|C(a)||C(b)|) Σ_{g : [a, gbg⁻¹] = 1} conj α(gbg⁻¹) conj β(g⁻¹ag)`,
/// `T = α(a)/α(1)`.
pub fn double_modular_data_bounded(g: &FiniteGroup, max_order: usize) -> Result<ModularData> {
    if g.order() > max_order {
        return Err(Error::UnsupportedParams(format!("group of order {} exceeds the bound {max_order}", g.order())));
    }
    struct Sector {
        rep: usize,
        elements: Vec<usize>,
        table: crate::group::CharacterTable,
    }
    let mut sectors = Vec::new();
    for cls in g.conjugacy_classes() {
        let rep = cls[0];
        let elements = g.centralizer(rep);
        let table = character_table(&g.subgroup(&elements)?)?;
        sectors.push(Sector { rep, elements, table });
    }
    // χ(x) for x ∈ C(a), x given as an element of G
    let value = |s: &Sector, chi: usize, x: usize| {
        let local = s.elements.iter().position(|&e| e == x).expect("element of the centralizer");
        s.table.value(chi, local).clone()
    };
    let mut labels = Vec::new();
    let mut keys = Vec::new();
    for (k, s) in sectors.iter().enumerate() {
        for chi in 0..s.table.values.len() {
            labels.push(format!("[{}]χ{chi}", s.rep));
            keys.push((k, chi));
        }
    }
    let r = keys.len();
    let mut s_mat = ExactMatrix::zeros(r, r);
    for (i, &(ka, alpha)) in keys.iter().enumerate() {
        for (j, &(kb, beta)) in keys.iter().enumerate() {
            let (sa, sb) = (&sectors[ka], &sectors[kb]);
            let (a, b) = (sa.rep, sb.rep);
            let mut sum = Scalar::zero();
            for h in 0..g.order() {
                let hbh = g.conjugate(h, b);
                if !g.commute(a, hbh) {
                    continue;
                }
                let hah = g.conjugate(g.inv(h), a);
                sum += &(&value(sa, alpha, hbh).conj() * &value(sb, beta, hah).conj());
            }
            let norm = Scalar::frac(1, (sa.elements.len() * sb.elements.len()) as i64);
            s_mat.set(i, j, &sum * &norm);
        }
    }
    let t = keys
        .iter()
        .map(|&(k, chi)| {
            let s = &sectors[k];
            let deg = s.table.degree(chi).inv().expect("degree is nonzero");
            &value(s, chi, s.rep) * &deg
        })
        .collect();
    Ok(ModularData { labels, s: s_mat, t })
}

#[cfg(test)]
mod tests;
