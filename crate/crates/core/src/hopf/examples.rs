//! Built-in Hopf algebras: group algebras and their duals, Sweedler's
//! four-dimensional algebra, and the small quantum group `u_q(sl2)`.

use super::presentation::HopfPresentation;
use super::RMatrix;
use crate::exact::{Accumulator, CycloScalar, SparseVec};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

type Scalar = CycloScalar;

/// A named example with its parameters.
#[derive(Clone, Debug)]
pub enum ExampleName {
    GroupAlgebra(FiniteGroup),
    DualGroupAlgebra(FiniteGroup),
    Sweedler(Scalar),
    UqSl2(u32),
}

/// Builds the presentation and, when one is standard, its R-matrix.
pub fn build_example(name: &ExampleName) -> Result<(HopfPresentation, Option<RMatrix>)> {
    match name {
        ExampleName::GroupAlgebra(g) => {
            let p = group_algebra(g);
            let r = RMatrix::trivial(&p);
            Ok((p, Some(r)))
        }
        ExampleName::DualGroupAlgebra(g) => {
            let p = dual_group_algebra(g);
            // 1⊗1 is an R-matrix only when the coproduct is cocommutative.
            let r = g.is_abelian().then(|| RMatrix::trivial(&p));
            Ok((p, r))
        }
        ExampleName::Sweedler(lambda) => {
            let (p, r) = sweedler(lambda);
            Ok((p, Some(r)))
        }
        ExampleName::UqSl2(l) => {
            let (p, r) = uq_sl2(*l)?;
            Ok((p, Some(r)))
        }
    }
}

/// Fills in coproducts and antipode images from their values on algebra
/// generators, given each basis vector as a word in those generators.
struct Builder {
    labels: Vec<String>,
    field: u32,
    products: Vec<SparseVec>,
    unit: SparseVec,
    counit: Vec<Scalar>,
}

impl Builder {
    fn finish_with(self, coproducts: Vec<SparseVec>, antipodes: Vec<SparseVec>) -> HopfPresentation {
        HopfPresentation::from_parts(
            self.labels,
            self.field,
            self.products,
            self.unit,
            coproducts,
            self.counit,
            antipodes,
        )
    }

    /// Presentation with placeholder coalgebra data, used only for multiplication.
    fn algebra_only(&self) -> HopfPresentation {
        let d = self.labels.len();
        HopfPresentation::from_parts(
            self.labels.clone(),
            self.field,
            self.products.clone(),
            self.unit.clone(),
            vec![SparseVec::new(); d],
            self.counit.clone(),
            vec![SparseVec::new(); d],
        )
    }

    /// `words[i]` lists generator indices whose product (left to right) is `e_i`.
    fn extend(
        self,
        words: &[Vec<usize>],
        gen_coproducts: &[SparseVec],
        gen_antipodes: &[SparseVec],
    ) -> HopfPresentation {
        let alg = self.algebra_only();
        let one2 = alg.unit_tensor(2);
        let coproducts = words
            .iter()
            .map(|w| w.iter().fold(one2.clone(), |acc, &g| alg.mul_tensor(2, &acc, &gen_coproducts[g])))
            .collect();
        let antipodes = words
            .iter()
            .map(|w| w.iter().fold(alg.unit().clone(), |acc, &g| alg.mul(&gen_antipodes[g], &acc)))
            .collect();
        self.finish_with(coproducts, antipodes)
    }
}

pub fn group_algebra(g: &FiniteGroup) -> HopfPresentation {
    let n = g.order();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let products = (0..n * n).map(|k| SparseVec::basis(g.mul(k / n, k % n))).collect();
    let coproducts = (0..n).map(|i| SparseVec::basis(i * n + i)).collect();
    let antipodes = (0..n).map(|i| SparseVec::basis(g.inv(i))).collect();
    HopfPresentation::from_parts(
        labels,
        1,
        products,
        SparseVec::basis(g.identity()),
        coproducts,
        vec![Scalar::one(); n],
        antipodes,
    )
}

/// Functions on `G`, in the basis of point indicators.
pub fn dual_group_algebra(g: &FiniteGroup) -> HopfPresentation {
    let n = g.order();
    let labels = (0..n).map(|i| format!("d{i}")).collect();
    let products =
        (0..n * n).map(|k| if k / n == k % n { SparseVec::basis(k / n) } else { SparseVec::new() }).collect();
    let unit = SparseVec::from_dense(&vec![Scalar::one(); n]);
    let coproducts = (0..n)
        .map(|c| {
            let mut acc = Accumulator::new();
            for a in 0..n {
                acc.add(a * n + g.mul(g.inv(a), c), Scalar::one());
            }
            acc.finish()
        })
        .collect();
    let counit = (0..n).map(|i| if i == g.identity() { Scalar::one() } else { Scalar::zero() }).collect();
    let antipodes = (0..n).map(|i| SparseVec::basis(g.inv(i))).collect();
    HopfPresentation::from_parts(labels, 1, products, unit, coproducts, counit, antipodes)
}

/// Sweedler's algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`, `xg = -gx`,
/// and the one-parameter family of R-matrices `R_λ`.
pub fn sweedler(lambda: &Scalar) -> (HopfPresentation, RMatrix) {
    // basis index a + 2b for g^a x^b
    let products = (0..16)
        .map(|k| {
            let (i, j) = (k / 4, k % 4);
            let (a, b, c, dd) = (i % 2, i / 2, j % 2, j / 2);
            if b + dd >= 2 {
                return SparseVec::new();
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            SparseVec::basis((a + c) % 2 + 2 * (b + dd)).scale(&Scalar::from_int(sign))
        })
        .collect();
    let b = Builder {
        labels: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        field: lambda.conductor(),
        products,
        unit: SparseVec::basis(0),
        counit: vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
    };
    let t = |i: usize, j: usize, c: i64| (i * 4 + j, Scalar::from_int(c));
    let vec_of = |terms: &[(usize, Scalar)]| {
        let mut acc = Accumulator::new();
        for (i, c) in terms {
            acc.add(*i, c.clone());
        }
        acc.finish()
    };
    // generators: 0 = g, 1 = x
    let gen_cop = [vec_of(&[t(1, 1, 1)]), vec_of(&[t(2, 0, 1), t(1, 2, 1)])];
    let gen_s = [SparseVec::basis(1), SparseVec::basis(3).scale(&Scalar::from_int(-1))];
    let words = vec![vec![], vec![0], vec![1], vec![0, 1]];
    let p = b.extend(&words, &gen_cop, &gen_s);

    let half = Scalar::frac(1, 2);
    let hl = &half * lambda;
    let mut acc = Accumulator::new();
    for (i, j, c) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        acc.add(i * 4 + j, &half * &Scalar::from_int(c));
    }
    for (i, j, c) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        acc.add(i * 4 + j, &hl * &Scalar::from_int(c));
    }
    let r = RMatrix::from_element(4, acc.finish());
    (p, r)
}

/// The small quantum group `u_q(sl2)` at `q = zeta_l`, `l` odd, in the PBW basis
/// `E^a F^b K^c` (`0 <= a, b, c < l`), with its standard R-matrix.
pub fn uq_sl2(l: u32) -> Result<(HopfPresentation, RMatrix)> {
    if l < 3 || l % 2 == 0 {
        return Err(Error::UnsupportedParams(format!(
            "u_q(sl2) needs an odd root-of-unity order l >= 3, got {l}"
        )));
    }
    let q = Uq::new(l);
    let n = l as usize;
    let d = n * n * n;
    let labels = (0..d).map(|i| {
        let (a, b, c) = q.split(i);
        format!("E^{a}F^{b}K^{c}")
    });
    let products = (0..d * d).map(|k| q.mul_basis(k / d, k % d)).collect();
    let counit = (0..d).map(|i| if q.split(i).0 == 0 && q.split(i).1 == 0 { Scalar::one() } else { Scalar::zero() });
    let b = Builder {
        labels: labels.collect(),
        field: l,
        products,
        unit: SparseVec::basis(0),
        counit: counit.collect(),
    };
    let (e, f, k, kinv) = (q.index(1, 0, 0), q.index(0, 1, 0), q.index(0, 0, 1), q.index(0, 0, n - 1));
    let one = q.index(0, 0, 0);
    let pair = |x: usize, y: usize| x * d + y;
    let mut de = Accumulator::new();
    de.add(pair(e, k), Scalar::one());
    de.add(pair(one, e), Scalar::one());
    let mut df = Accumulator::new();
    df.add(pair(f, one), Scalar::one());
    df.add(pair(kinv, f), Scalar::one());
    let gen_cop = [de.finish(), df.finish(), SparseVec::basis(pair(k, k))];
    let minus = Scalar::from_int(-1);
    let gen_s = [
        q.mul_basis(e, kinv).scale(&minus),
        q.mul_basis(k, f).scale(&minus),
        SparseVec::basis(kinv),
    ];
    // E^a F^b K^c as the word E..E F..F K..K
    let words: Vec<Vec<usize>> = (0..d)
        .map(|i| {
            let (a, bb, c) = q.split(i);
            std::iter::repeat(0).take(a).chain(std::iter::repeat(1).take(bb)).chain(std::iter::repeat(2).take(c)).collect()
        })
        .collect();
    let p = b.extend(&words, &gen_cop, &gen_s);
    let r = q.r_matrix(&p);
    Ok((p, r))
}

struct Uq {
    l: usize,
    /// `q^k` for `k` in `0..l`
    qpow: Vec<Scalar>,
    /// `1/(q - q^-1)`
    inv_diff: Scalar,
}

impl Uq {
    fn new(l: u32) -> Self {
        let qpow: Vec<Scalar> = (0..l as i64).map(|k| Scalar::zeta_pow(l, k)).collect();
        let diff = &qpow[1] - &qpow[l as usize - 1];
        Uq { l: l as usize, inv_diff: diff.inv().expect("q - q^-1 is nonzero"), qpow }
    }

    fn q(&self, k: i64) -> &Scalar {
        &self.qpow[k.rem_euclid(self.l as i64) as usize]
    }

    fn index(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.l + b) * self.l + c
    }

    fn split(&self, i: usize) -> (usize, usize, usize) {
        (i / (self.l * self.l), (i / self.l) % self.l, i % self.l)
    }

    fn left_k(&self, v: &SparseVec, power: i64) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            let (a, b, c) = self.split(*i);
            let shift = power * (2 * a as i64 - 2 * b as i64);
            let nc = (c as i64 + power).rem_euclid(self.l as i64) as usize;
            acc.add(self.index(a, b, nc), x * self.q(shift));
        }
        acc.finish()
    }

    fn left_e(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            let (a, b, c) = self.split(*i);
            if a + 1 < self.l {
                acc.add(self.index(a + 1, b, c), x.clone());
            }
        }
        acc.finish()
    }

    /// `(K - K^-1)/(q - q^-1)` acting on the left.
    fn left_h(&self, v: &SparseVec) -> SparseVec {
        self.left_k(v, 1).sub(&self.left_k(v, -1)).scale(&self.inv_diff)
    }

    fn left_f(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            acc.add_vec(&self.left_f_basis(*i), x);
        }
        acc.finish()
    }

    // F E X = E (F X) - H X
    fn left_f_basis(&self, i: usize) -> SparseVec {
        let (a, b, c) = self.split(i);
        if a == 0 {
            return if b + 1 < self.l { SparseVec::basis(self.index(0, b + 1, c)) } else { SparseVec::new() };
        }
        let rest = SparseVec::basis(self.index(a - 1, b, c));
        self.left_e(&self.left_f(&rest)).sub(&self.left_h(&rest))
    }

    fn mul_basis(&self, i: usize, j: usize) -> SparseVec {
        let (a, b, c) = self.split(i);
        let mut v = SparseVec::basis(j);
        v = self.left_k(&v, c as i64);
        for _ in 0..b {
            v = self.left_f(&v);
        }
        for _ in 0..a {
            v = self.left_e(&v);
        }
        v
    }

    fn qint(&self, k: i64) -> Scalar {
        (self.q(k) - self.q(-k)).div(&(self.q(1) - self.q(-1))).expect("nonzero")
    }

    /// `R = (1/l) Σ q^{-2ij} K^i⊗K^j · Σ_n (q-q^-1)^n / [n]! q^{n(n-1)/2} E^n⊗F^n`.
    fn r_matrix(&self, p: &HopfPresentation) -> RMatrix {
        let l = self.l;
        let d = p.dim();
        let mut cartan = Accumulator::new();
        let inv_l = Scalar::frac(1, l as i64);
        for i in 0..l {
            for j in 0..l {
                let c = self.q(-2 * (i * j) as i64) * &inv_l;
                cartan.add(self.index(0, 0, i) * d + self.index(0, 0, j), c);
            }
        }
        let mut theta = Accumulator::new();
        let diff = self.q(1) - self.q(-1);
        let mut fact = Scalar::one();
        for nn in 0..l {
            if nn > 0 {
                fact = &fact * &self.qint(nn as i64);
            }
            let coeff = (diff.pow(nn as u32) * self.q((nn * nn.saturating_sub(1) / 2) as i64).clone())
                .div(&fact)
                .expect("[n]! nonzero below l");
            theta.add(self.index(nn, 0, 0) * d + self.index(0, nn, 0), coeff);
        }
        RMatrix::from_element(d, p.mul_tensor(2, &cartan.finish(), &theta.finish()))
    }
}
