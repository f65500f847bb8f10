//! Exact arithmetic in `Z[zeta]` for `zeta` a primitive `p^j`-th root of unity,
//! and the absolute norm down to `Z`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::sylvester::bareiss_determinant;
use crate::arith::phi_prime_power;
use crate::poly::Ring;

/// Element of `Z[zeta_{p^j}]` in the power basis `1, zeta, ..., zeta^(phi - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloInt {
    p: u64,
    level: u32,
    coeffs: Vec<BigInt>,
}

impl CycloInt {
    pub fn zero(p: u64, level: u32) -> Self {
        let n = phi_prime_power(p, level) as usize;
        CycloInt { p, level, coeffs: vec![BigInt::zero(); n] }
    }

    pub fn from_int(p: u64, level: u32, c: BigInt) -> Self {
        let mut z = Self::zero(p, level);
        z.coeffs[0] = c;
        z
    }

    pub fn one(p: u64, level: u32) -> Self {
        Self::from_int(p, level, BigInt::one())
    }

    /// Reduces an arbitrary coefficient vector (`sum c_e x^e`) into the basis.
    pub fn from_coeffs(p: u64, level: u32, raw: Vec<BigInt>) -> Self {
        let mut z = Self::zero(p, level);
        z.coeffs = reduce(p, level, raw);
        z
    }

    /// `sum c * zeta^e` for exponent/coefficient pairs; exponents are taken mod `p^level`.
    pub fn from_exponents<'a, I>(p: u64, level: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, &'a BigInt)>,
    {
        let order = p.pow(level);
        let phi = phi_prime_power(p, level) as usize;
        let q = if level == 0 { 0 } else { p.pow(level - 1) as usize };
        let mut out = Self::zero(p, level);
        for (e, c) in terms {
            let e = (e % order) as usize;
            if level == 0 {
                out.coeffs[0] += c;
            } else if e < phi {
                out.coeffs[e] += c;
            } else {
                // zeta^e = -sum_{k=1}^{p-1} zeta^(e - k q)
                for k in 1..p as usize {
                    out.coeffs[e - k * q] -= c;
                }
            }
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycloInt { p: self.p, level: self.level, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycloInt { p: self.p, level: self.level, coeffs }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CycloInt { p: self.p, level: self.level, coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.p, self.level), (rhs.p, rhs.level));
        let n = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.p, self.level, raw)
    }

    /// Absolute norm `N_{Q(zeta)/Q}`, the product of all Galois conjugates.
    pub fn norm(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        match self.level {
            0 => self.coeffs[0].clone(),
            1 => {
                let n = self.coeffs.len();
                let mut cols = Vec::with_capacity(n);
                let mut cur = self.clone();
                let zeta = CycloInt::from_exponents(self.p, 1, [(1u64, &BigInt::one())]);
                for _ in 0..n {
                    cols.push(cur.coeffs.clone());
                    cur = cur.mul(&zeta);
                }
                let m: Vec<Vec<BigInt>> = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
                bareiss_determinant(m, &BigInt::zero())
            }
            _ => self.relative_norm().norm(),
        }
    }

    /// Norm from level `j` down to level `j - 1` (requires `j >= 2`).
    pub fn relative_norm(&self) -> CycloInt {
        assert!(self.level >= 2);
        let p = self.p as usize;
        let lower = self.level - 1;
        let sub_len = phi_prime_power(self.p, lower) as usize;
        // a(x) = sum_r x^r A_r(x^p)
        let parts: Vec<CycloInt> = (0..p)
            .map(|r| {
                let mut c = vec![BigInt::zero(); sub_len];
                for (q, slot) in c.iter_mut().enumerate() {
                    if let Some(v) = self.coeffs.get(q * p + r) {
                        *slot = v.clone();
                    }
                }
                CycloInt { p: self.p, level: lower, coeffs: c }
            })
            .collect();
        let eta = CycloInt::from_exponents(self.p, lower, [(1u64, &BigInt::one())]);
        let zero = CycloInt::zero(self.p, lower);
        let mut m = vec![vec![zero.clone(); p]; p];
        for s in 0..p {
            for (r, a) in parts.iter().enumerate() {
                let row = (r + s) % p;
                m[row][s] = if r + s >= p { a.mul(&eta) } else { a.clone() };
            }
        }
        berkowitz_determinant(&m, &zero)
    }
}

fn reduce(p: u64, level: u32, mut raw: Vec<BigInt>) -> Vec<BigInt> {
    let phi = phi_prime_power(p, level) as usize;
    if level == 0 {
        let s = raw.into_iter().sum();
        return vec![s];
    }
    let order = p.pow(level) as usize;
    if raw.len() > order {
        let extra = raw.split_off(order);
        for (i, c) in extra.into_iter().enumerate() {
            raw[i % order] += c;
        }
    }
    raw.resize(order, BigInt::zero());
    let q = p.pow(level - 1) as usize;
    for e in (phi..order).rev() {
        let c = std::mem::take(&mut raw[e]);
        if c.is_zero() {
            continue;
        }
        for k in 1..p as usize {
            raw[e - k * q] -= &c;
        }
    }
    raw.truncate(phi);
    raw
}

impl Ring for CycloInt {
    fn ring_zero(&self) -> Self {
        CycloInt::zero(self.p, self.level)
    }
    fn ring_one(&self) -> Self {
        CycloInt::one(self.p, self.level)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

/// Division-free determinant (Samuelson-Berkowitz) over any commutative ring.
pub fn berkowitz_determinant<R: Ring>(a: &[Vec<R>], unit: &R) -> R {
    let n = a.len();
    let one = unit.ring_one();
    if n == 0 {
        return one;
    }
    let mut vect = vec![one.clone(), a[0][0].ring_neg()];
    for r in 1..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(one.clone());
        t.push(a[r][r].ring_neg());
        let mut v: Vec<R> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let mut dot = unit.ring_zero();
            for (j, vj) in v.iter().enumerate() {
                dot = dot.ring_add(&a[r][j].ring_mul(vj));
            }
            t.push(dot.ring_neg());
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        let mut s = unit.ring_zero();
                        for (j, vj) in v.iter().enumerate() {
                            s = s.ring_add(&a[i][j].ring_mul(vj));
                        }
                        s
                    })
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = unit.ring_zero();
            for j in 0..=i.min(r) {
                s = s.ring_add(&t[i - j].ring_mul(&vect[j]));
            }
            next.push(s);
        }
        vect = next;
    }
    let last = vect.pop().unwrap();
    if n % 2 == 1 {
        last.ring_neg()
    } else {
        last
    }
}
