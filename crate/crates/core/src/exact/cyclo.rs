//! Elements of cyclotomic fields `Q(zeta_n)` in the reduced power basis.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::{smallvec, SmallVec};

use super::rational::{lcm_u32, Rational};
use crate::error::{Error, Result};

type Coeffs = SmallVec<[Rational; 2]>;

/// Reduction data for one conductor: `x^k mod Phi_n` for small `k`.
#[derive(Debug)]
struct FieldTable {
    n: u32,
    phi: usize,
    /// `powers[k]` = coefficients of `x^k mod Phi_n`, length `phi`.
    powers: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic; coefficients low to high
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic_poly(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_poly(d, memo);
            p = poly_div_exact(&p, &pd);
        }
    }
    memo.insert(n, p.clone());
    p
}

impl FieldTable {
    fn build(n: u32) -> FieldTable {
        let mut memo = HashMap::new();
        let phi_poly = cyclotomic_poly(n, &mut memo);
        let phi = phi_poly.len() - 1;
        let len = (n as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(len);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..len {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for j in 0..phi {
                    next[j] -= top * phi_poly[j];
                }
            }
            cur = next;
        }
        FieldTable { n, phi, powers }
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<FieldTable>>>> = OnceLock::new();

thread_local! {
    static LAST: RefCell<Option<Arc<FieldTable>>> = const { RefCell::new(None) };
}

fn table(n: u32) -> Arc<FieldTable> {
    if let Some(t) = LAST.with(|l| l.borrow().as_ref().filter(|t| t.n == n).cloned()) {
        return t;
    }
    let t = {
        let mut map = TABLES
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .expect("field table lock");
        map.entry(n)
            .or_insert_with(|| Arc::new(FieldTable::build(n)))
            .clone()
    };
    LAST.with(|l| *l.borrow_mut() = Some(t.clone()));
    t
}

/// Euler's totient, as the dimension of `Q(zeta_n)` over `Q`.
pub fn euler_phi(n: u32) -> usize {
    table(n).phi
}

/// An element of `Q(zeta_n)`, stored in the power basis `1, z, ..., z^(phi(n)-1)`
/// reduced modulo the n-th cyclotomic polynomial.
#[derive(Clone)]
pub struct CycloScalar {
    n: u32,
    coeffs: Coeffs,
}

impl CycloScalar {
    pub fn zero() -> Self {
        CycloScalar { n: 1, coeffs: smallvec![Rational::ZERO] }
    }

    pub fn one() -> Self {
        CycloScalar { n: 1, coeffs: smallvec![Rational::ONE] }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloScalar { n: 1, coeffs: smallvec![r] }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_int(i))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let t = table(n);
        CycloScalar {
            n,
            coeffs: t.powers[e].iter().map(|&c| Rational::from_int(c)).collect(),
        }
    }

    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// Reduces a raw coefficient vector `sum_k raw[k] zeta_n^k` to canonical form.
    pub fn reduce(n: u32, raw: &[Rational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedConductor);
        }
        let t = table(n);
        let mut out: Coeffs = smallvec![Rational::ZERO; t.phi];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[k % n as usize];
            for (o, &p) in out.iter_mut().zip(row) {
                if p != 0 {
                    *o = &*o + &(c * &Rational::from_int(p));
                }
            }
        }
        Ok(CycloScalar { n, coeffs: out })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the element over `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "embedding needs a multiple of the conductor");
        let step = (m / self.n) as usize;
        let t = table(m);
        let mut out: Coeffs = smallvec![Rational::ZERO; t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(k * step) % m as usize];
            for (o, &p) in out.iter_mut().zip(row) {
                if p != 0 {
                    *o = &*o + &(c * &Rational::from_int(p));
                }
            }
        }
        CycloScalar { n: m, coeffs: out }
    }

    fn unify<'a>(
        a: &'a CycloScalar,
        b: &'a CycloScalar,
    ) -> (std::borrow::Cow<'a, CycloScalar>, std::borrow::Cow<'a, CycloScalar>) {
        use std::borrow::Cow;
        if a.n == b.n {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let l = lcm_u32(a.n, b.n);
            (Cow::Owned(a.embed(l)), Cow::Owned(b.embed(l)))
        }
    }

    fn scale(&self, r: &Rational) -> CycloScalar {
        CycloScalar { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Complex conjugation, realized as the Galois automorphism `zeta -> zeta^-1`.
    pub fn conj(&self) -> CycloScalar {
        if self.n <= 2 {
            return self.clone();
        }
        let n = self.n as usize;
        let mut raw = vec![Rational::ZERO; n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] = c.clone();
        }
        CycloScalar::reduce(self.n, &raw).expect("conductor is positive")
    }

    /// Applies the Galois automorphism `zeta_n -> zeta_n^k` (k coprime to n).
    pub fn galois(&self, k: i64) -> CycloScalar {
        let n = self.n as usize;
        let mut raw = vec![Rational::ZERO; n];
        for (j, c) in self.coeffs.iter().enumerate() {
            let idx = ((j as i64 * k).rem_euclid(n as i64)) as usize;
            raw[idx] = &raw[idx] + c;
        }
        CycloScalar::reduce(self.n, &raw).expect("conductor is positive")
    }

    /// True iff the element lies in `Q(zeta_m)`, i.e. is fixed by every
    /// automorphism of its own field that fixes `zeta_m`.
    pub fn lies_in(&self, m: u32) -> bool {
        let c = self.n;
        let m = if m % 2 == 1 { 2 * m } else { m };
        let g = num_integer::gcd(c, m);
        (1..=c as i64)
            .filter(|&k| num_integer::gcd(k, c as i64) == 1 && (k - 1) % g as i64 == 0)
            .all(|k| k == 1 || &self.galois(k) == self)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(CycloScalar::from_rational(r.recip()).embed(self.n));
        }
        // Solve (mult-by-self) x = 1 over Q.
        let phi = self.coeffs.len();
        let mut cols: Vec<CycloScalar> = Vec::with_capacity(phi);
        for j in 0..phi {
            cols.push(self * &CycloScalar::zeta_pow(self.n, j as i64));
        }
        let mut a: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..phi {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=phi {
                        let sub = &f * &a[col][c];
                        a[r][c] = &a[r][c] - &sub;
                    }
                }
            }
        }
        Some(CycloScalar { n: self.n, coeffs: a.into_iter().map(|row| row[phi].clone()).collect() })
    }

    pub fn div(&self, other: &CycloScalar) -> Option<CycloScalar> {
        Some(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> CycloScalar {
        let mut base = self.clone();
        let mut acc = CycloScalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the text form: `q(a/b)`, `zeta(n)[c0, c1, ...]`, or a bare rational.
    pub fn parse(s: &str) -> std::result::Result<CycloScalar, String> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("q(") {
            let inner = rest.strip_suffix(')').ok_or("missing ')' in q(...)")?;
            let r = Rational::parse(inner).ok_or_else(|| format!("bad rational '{inner}'"))?;
            return Ok(CycloScalar::from_rational(r));
        }
        if let Some(rest) = s.strip_prefix("zeta(") {
            let (n, tail) = rest.split_once(')').ok_or("missing ')' in zeta(...)")?;
            let n: u32 = n.trim().parse().map_err(|_| format!("bad conductor '{n}'"))?;
            if n == 0 {
                return Err("conductor must be positive".into());
            }
            let tail = tail.trim();
            let list = tail
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or("expected [c0, c1, ...] after zeta(n)")?;
            let mut raw = Vec::new();
            for part in list.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                raw.push(Rational::parse(part).ok_or_else(|| format!("bad coefficient '{part}'"))?);
            }
            return CycloScalar::reduce(n, &raw).map_err(|e| e.to_string());
        }
        Rational::parse(s)
            .map(CycloScalar::from_rational)
            .ok_or_else(|| format!("bad scalar '{s}'"))
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = CycloScalar::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloScalar {}

impl Default for CycloScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloScalar {
    fn from(i: i64) -> Self {
        Self::from_int(i)
    }
}

impl From<Rational> for CycloScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        if rhs.n == 1 && self.n != 1 {
            let mut out = self.clone();
            out.coeffs[0] = &out.coeffs[0] + &rhs.coeffs[0];
            return out;
        }
        if self.n == 1 && rhs.n != 1 {
            return rhs + self;
        }
        let (a, b) = CycloScalar::unify(self, rhs);
        CycloScalar {
            n: a.n,
            coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        if rhs.n == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.n == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let (a, b) = CycloScalar::unify(self, rhs);
        let t = table(a.n);
        let phi = t.phi;
        let mut raw = vec![Rational::ZERO; 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = &raw[i + j] + &(x * y);
                }
            }
        }
        let mut out: Coeffs = smallvec![Rational::ZERO; phi];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] = &out[k] + c;
            } else {
                for (o, &p) in out.iter_mut().zip(&t.powers[k]) {
                    if p != 0 {
                        *o = &*o + &(c * &Rational::from_int(p));
                    }
                }
            }
        }
        CycloScalar { n: a.n, coeffs: out }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: CycloScalar) -> CycloScalar {
        &self + &rhs
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: CycloScalar) -> CycloScalar {
        &self - &rhs
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: CycloScalar) -> CycloScalar {
        &self * &rhs
    }
}

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        if rhs.is_zero() {
            return;
        }
        if self.n == rhs.n || rhs.n == 1 {
            if rhs.n == 1 {
                self.coeffs[0] = &self.coeffs[0] + &rhs.coeffs[0];
            } else {
                for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                    if !y.is_zero() {
                        *x = &*x + y;
                    }
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        *self += &(-rhs);
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "q({r})");
        }
        write!(f, "zeta({})[", self.n)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
