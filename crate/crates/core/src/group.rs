//! Finite groups given by multiplication tables.

mod characters;

pub use characters::{character_table, CharacterTable};

use crate::error::{Error, Result};

/// A finite group on elements `0..order`, with `mul(a, b)` read from a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table (row `a`, column `b` holds `a*b`).
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if rows.iter().flatten().any(|&x| x >= m) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let at = |a: usize, b: usize| table[a * m + b];
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(m);
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(FiniteGroup { order: m, table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(rows).expect("cyclic group table")
    }

    /// The symmetric group on `k` points; permutations in lexicographic order,
    /// so the identity is element 0.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut p: Vec<usize> = (0..k).collect();
        loop {
            perms.push(p.clone());
            // next permutation
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).expect("successor");
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        let index = |q: &Vec<usize>| perms.iter().position(|x| x == q).expect("permutation");
        let rows = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a*b)(x) = a(b(x))
                        let c: Vec<usize> = (0..k).map(|x| a[b[x]]).collect();
                        index(&c)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows).expect("symmetric group table")
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (self.order, other.order);
        let rows = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| self.mul(x / n, y / n) * n + other.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        Self::from_table(rows).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.commute(a, b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    /// Conjugacy classes, each sorted, ordered by smallest member (identity first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        let mut starts: Vec<usize> = vec![self.identity];
        starts.extend((0..self.order).filter(|&a| a != self.identity));
        for a in starts {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order).map(|g| self.conjugate(g, a)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                seen[x] = true;
            }
            classes.push(cls);
        }
        classes
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&g| self.commute(a, g)).collect()
    }

    /// The subgroup on `elements` (closed under multiplication), re-indexed
    /// `0..elements.len()` in the given order.
    pub fn subgroup(&self, elements: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| elements.iter().position(|&e| e == x);
        let rows = elements
            .iter()
            .map(|&a| {
                elements
                    .iter()
                    .map(|&b| pos(self.mul(a, b)).ok_or_else(|| Error::NotAGroup("subset not closed".into())))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CycloScalar;

    #[test]
    fn character_tables_are_orthonormal() {
        let groups = [
            FiniteGroup::cyclic(1),
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(6),
            FiniteGroup::symmetric(3),
            FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
            FiniteGroup::cyclic(2).direct_product(&FiniteGroup::symmetric(3)),
        ];
        for g in groups {
            let t = character_table(&g).unwrap();
            assert_eq!(t.values.len(), t.classes.len());
            for a in 0..t.values.len() {
                for b in 0..t.values.len() {
                    let mut s = CycloScalar::zero();
                    for (c, cls) in t.classes.iter().enumerate() {
                        s += &(&(&t.values[a][c] * &t.values[b][c].conj()) * &CycloScalar::from_int(cls.len() as i64));
                    }
                    let expected = if a == b { g.order() as i64 } else { 0 };
                    assert_eq!(s, CycloScalar::from_int(expected), "order {}", g.order());
                }
            }
        }
        let s3 = character_table(&FiniteGroup::symmetric(3)).unwrap();
        let degrees: Vec<&CycloScalar> = (0..3).map(|i| s3.degree(i)).collect();
        assert_eq!(degrees.iter().filter(|d| d.is_one()).count(), 2);
        assert!(degrees.contains(&&CycloScalar::from_int(2)));
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn product_of_cyclics() {
        let v = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
        assert_eq!(v.exponent(), 2);
    }
}
