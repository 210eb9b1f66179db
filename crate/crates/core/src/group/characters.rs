//! Character tables of small groups from the class algebra.
//!
//! Each irreducible character `χ` gives an algebra map `ω_χ` on the centre of
//! the group algebra, `ω_χ(C) = |C| χ(g_C) / χ(1)`. These are the common
//! eigenvectors of the class multiplication matrices. Eigenvalue candidates
//! are enumerated from the constraint that `χ(g)` is a sum of `χ(1)` roots of
//! unity of order dividing `o(g)`.

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact::{CycloScalar, ExactMatrix, Rational};

type Scalar = CycloScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    /// Conjugacy classes, the identity's first.
    pub classes: Vec<Vec<usize>>,
    /// `values[χ][c] = χ(g)` for `g` in class `c`; the trivial character first.
    pub values: Vec<Vec<Scalar>>,
}

impl CharacterTable {
    pub fn class_of(&self, g: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&g)).expect("every element has a class")
    }

    pub fn value(&self, chi: usize, g: usize) -> &Scalar {
        &self.values[chi][self.class_of(g)]
    }

    pub fn degree(&self, chi: usize) -> &Scalar {
        &self.values[chi][0]
    }
}

/// Multisets of `n` roots of unity of order dividing `m`, summed.
fn root_sums(m: usize, n: usize) -> Vec<Scalar> {
    fn go(m: usize, n: usize, from: usize, acc: Scalar, out: &mut Vec<Scalar>) {
        if n == 0 {
            if !out.contains(&acc) {
                out.push(acc);
            }
            return;
        }
        for k in from..m {
            go(m, n - 1, k, &acc + &Scalar::zeta_pow(m as u32, k as i64), out);
        }
    }
    let mut out = Vec::new();
    go(m, n, 0, Scalar::zero(), &mut out);
    out
}

fn integer_sqrt(r: &Rational) -> Option<usize> {
    let n = r.to_i64().filter(|&n| r.is_integer() && n >= 0)?;
    let s = num_integer::Roots::sqrt(&n);
    (s * s == n).then_some(s as usize)
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let order = g.order();
    let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).expect("class");
    // a[j][i][k]: coefficient of C_k in C_j C_i
    let mut a = vec![vec![vec![0i64; r]; r]; r];
    for (j, cj) in classes.iter().enumerate() {
        for (i, ci) in classes.iter().enumerate() {
            for &x in cj {
                for &y in ci {
                    a[j][i][class_of(g.mul(x, y))] += 1;
                }
            }
            for (k, ck) in classes.iter().enumerate() {
                a[j][i][k] /= ck.len() as i64;
            }
        }
    }
    let mats: Vec<ExactMatrix> = (0..r)
        .map(|j| ExactMatrix::from_fn(r, r, |i, k| Scalar::from_int(a[j][i][k])))
        .collect();

    let degrees: Vec<usize> = (1..=order).filter(|n| n * n <= order && order % n == 0).collect();
    let candidates: Vec<Vec<Scalar>> = classes
        .iter()
        .enumerate()
        .map(|(j, cj)| {
            let m = g.element_order(cj[0]);
            let size = Scalar::from_int(cj.len() as i64);
            let mut out: Vec<Scalar> = Vec::new();
            for &n in &degrees {
                let scale = &size * &Scalar::frac(1, n as i64);
                for s in root_sums(m, n) {
                    let lambda = &scale * &s;
                    if !out.contains(&lambda) && (&mats[j] - &ExactMatrix::identity(r).scale(&lambda)).rank() < r {
                        out.push(lambda);
                    }
                }
            }
            out
        })
        .collect();

    // common eigenvectors, one coordinate of the eigenvalue tuple at a time
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let mut stack: Vec<(usize, Vec<Vec<Scalar>>)> = vec![(0, Vec::new())];
    while let Some((j, rows)) = stack.pop() {
        if j == r {
            let sys = ExactMatrix::from_rows(rows)?;
            let ker = sys.kernel();
            if ker.len() != 1 {
                return Err(Error::InternalInconsistency(format!("class algebra eigenspace of dimension {}", ker.len())));
            }
            let w = &ker[0];
            let w0 = w[0].inv().ok_or_else(|| Error::InternalInconsistency("eigenvector vanishes at the identity".into()))?;
            found.push(w.iter().map(|x| x * &w0).collect());
            continue;
        }
        for lambda in candidates[j].iter().rev() {
            let shifted = &mats[j] - &ExactMatrix::identity(r).scale(lambda);
            let mut next = rows.clone();
            next.extend((0..r).map(|i| shifted.row(i).to_vec()));
            if !ExactMatrix::from_rows(next.clone())?.kernel().is_empty() {
                stack.push((j + 1, next));
            }
        }
    }
    if found.len() != r {
        return Err(Error::InternalInconsistency(format!("{} characters for {r} classes", found.len())));
    }

    let mut values = Vec::with_capacity(r);
    for w in &found {
        // χ(1)² Σ_c |ω(C)|² / |C| = |G|
        let mut norm = Scalar::zero();
        for (c, x) in w.iter().enumerate() {
            norm += &(&(x * &x.conj()) * &Scalar::frac(1, classes[c].len() as i64));
        }
        let ratio = Scalar::from_int(order as i64).div(&norm).and_then(|q| q.as_rational().cloned());
        let deg = ratio
            .as_ref()
            .and_then(integer_sqrt)
            .ok_or_else(|| Error::InternalInconsistency("character degree is not an integer".into()))?;
        let chi = w
            .iter()
            .enumerate()
            .map(|(c, x)| x * &Scalar::frac(deg as i64, classes[c].len() as i64))
            .collect::<Vec<_>>();
        values.push(chi);
    }
    let total: i64 = values.iter().map(|chi| chi[0].as_rational().and_then(Rational::to_i64).unwrap_or(0).pow(2)).sum();
    if total != order as i64 {
        return Err(Error::InternalInconsistency(format!("squared degrees sum to {total}, not {order}")));
    }
    let trivial = values.iter().position(|chi| chi.iter().all(Scalar::is_one)).expect("trivial character");
    let t = values.remove(trivial);
    values.insert(0, t);
    Ok(CharacterTable { classes, values })
}
