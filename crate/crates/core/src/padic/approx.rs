use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::PadicError;
use crate::arith::{big_pow, ilog, is_prime, mod_inverse, split_p, vp_u64};

/// `v_p(x)`; zero has no valuation.
pub fn vp(x: &BigInt, p: u64) -> Result<u64, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    if x.is_zero() {
        return Err(PadicError::ZeroValuation);
    }
    Ok(split_p(x, p).0)
}

/// `x * |x|_p`: the part of `x` prime to `p`, sign kept.
pub fn nonp_part(x: &BigInt, p: u64) -> Result<BigInt, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    if x.is_zero() {
        return Err(PadicError::ZeroValuation);
    }
    Ok(split_p(x, p).1)
}

/// An element of `Z_p` known modulo `p^precision`, stored as `p^v * u`.
///
/// `valuation == None` means the element is zero at the stated precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicApprox {
    p: u64,
    precision: u32,
    valuation: Option<u32>,
    unit: BigInt,
}

impl PadicApprox {
    pub fn zero(p: u64, precision: u32) -> Self {
        PadicApprox { p, precision, valuation: None, unit: BigInt::zero() }
    }

    pub fn from_integer(x: &BigInt, p: u64, precision: u32) -> Self {
        if x.is_zero() {
            return Self::zero(p, precision);
        }
        let (v, u) = split_p(x, p);
        if v >= precision as u64 {
            return Self::zero(p, precision);
        }
        let v = v as u32;
        let m = big_pow(p, precision - v);
        PadicApprox { p, precision, valuation: Some(v), unit: u.mod_floor(&m) }
    }

    pub fn from_i64(x: i64, p: u64, precision: u32) -> Self {
        Self::from_integer(&BigInt::from(x), p, precision)
    }

    /// `num / den` in `Z_p`; fails if the quotient is not p-integral.
    pub fn from_ratio(num: &BigInt, den: &BigInt, p: u64, precision: u32) -> Result<Self, PadicError> {
        if den.is_zero() {
            return Err(PadicError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(p, precision));
        }
        let (vn, un) = split_p(num, p);
        let (vd, ud) = split_p(den, p);
        if vn < vd {
            return Err(PadicError::NegativeValuation);
        }
        let v = vn - vd;
        if v >= precision as u64 {
            return Ok(Self::zero(p, precision));
        }
        let m = big_pow(p, precision - v as u32);
        let inv = mod_inverse(&ud, &m).expect("unit is invertible");
        Ok(PadicApprox { p, precision, valuation: Some(v as u32), unit: (un * inv).mod_floor(&m) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn valuation(&self) -> Option<u32> {
        self.valuation
    }

    /// Unit part, reduced modulo `p^(precision - v)`.
    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    pub fn modulus(&self) -> BigInt {
        big_pow(self.p, self.precision)
    }

    /// Representative in `[0, p^precision)`.
    pub fn residue(&self) -> BigInt {
        match self.valuation {
            None => BigInt::zero(),
            Some(v) => (&self.unit * big_pow(self.p, v)).mod_floor(&self.modulus()),
        }
    }

    /// Representative in `(-p^precision / 2, p^precision / 2]`.
    pub fn signed_residue(&self) -> BigInt {
        let m = self.modulus();
        let r = self.residue();
        if &r * 2 > m {
            r - m
        } else {
            r
        }
    }

    /// Drops to a lower precision.
    pub fn truncate(&self, precision: u32) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        Self::from_integer(&self.residue(), self.p, precision)
    }

    pub fn neg(&self) -> Self {
        Self::from_integer(&-self.residue(), self.p, self.precision)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let k = self.precision.min(rhs.precision);
        Self::from_integer(&(self.residue() + rhs.residue()), self.p, k)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let k = self.precision.min(rhs.precision);
        Self::from_integer(&(self.residue() - rhs.residue()), self.p, k)
    }

    /// Product; the result keeps the smaller relative precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        match (self.valuation, rhs.valuation) {
            (Some(a), Some(b)) => {
                let rel = (self.precision - a).min(rhs.precision - b);
                let k = a + b + rel;
                Self::from_integer(&(&self.unit * &rhs.unit * big_pow(self.p, a + b)), self.p, k)
            }
            (None, Some(b)) => Self::zero(self.p, self.precision + b),
            (Some(a), None) => Self::zero(self.p, rhs.precision + a),
            (None, None) => Self::zero(self.p, self.precision + rhs.precision),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        self.mul(&Self::from_integer(k, self.p, self.precision + vp(k, self.p).unwrap_or(0) as u32))
    }

    /// Quotient, when `rhs` is nonzero with valuation at most that of `self`.
    pub fn div(&self, rhs: &Self) -> Result<Self, PadicError> {
        assert_eq!(self.p, rhs.p);
        let b = rhs.valuation.ok_or(PadicError::DivisionByZero)?;
        let Some(a) = self.valuation else {
            return Ok(Self::zero(self.p, self.precision.saturating_sub(b)));
        };
        if a < b {
            return Err(PadicError::NegativeValuation);
        }
        let rel = (self.precision - a).min(rhs.precision - b);
        let m = big_pow(self.p, rel);
        let inv = mod_inverse(&rhs.unit, &m).expect("unit");
        let u = (&self.unit * inv).mod_floor(&m);
        let k = a - b + rel;
        Ok(Self::from_integer(&(u * big_pow(self.p, a - b)), self.p, k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_integer(&BigInt::one(), self.p, self.precision);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Number of leading p-adic digits on which both agree, capped by the
    /// smaller precision.
    pub fn agreement(&self, rhs: &Self) -> u32 {
        assert_eq!(self.p, rhs.p);
        let k = self.precision.min(rhs.precision);
        let diff = self.residue() - rhs.residue();
        if diff.is_zero() {
            return k;
        }
        (split_p(&diff, self.p).0 as u32).min(k)
    }

    /// `true` if both agree modulo `p^digits` (`digits` must not exceed either precision).
    pub fn eq_mod(&self, rhs: &Self, digits: u32) -> bool {
        self.agreement(rhs) >= digits
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0 mod {}^{}", self.p, self.precision),
            Some(v) => write!(f, "{}^{} * {} mod {}^{}", self.p, v, self.unit, self.p, self.precision),
        }
    }
}

/// Teichmuller representative: the unique `(p-1)`-th root of unity congruent
/// to `x` (mod `p`, or mod 4 when `p = 2`), and 0 when `p | x`.
pub fn teichmuller(x: &BigInt, p: u64, precision: u32) -> Result<PadicApprox, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime(p));
    }
    let pb = BigInt::from(p);
    if x.mod_floor(&pb).is_zero() {
        return Ok(PadicApprox::zero(p, precision));
    }
    if p == 2 {
        let s = if x.mod_floor(&BigInt::from(4)) == BigInt::one() { 1 } else { -1 };
        return Ok(PadicApprox::from_i64(s, 2, precision));
    }
    let m = big_pow(p, precision);
    let mut y = x.mod_floor(&m);
    for _ in 0..=precision {
        let next = y.modpow(&pb, &m);
        if next == y {
            break;
        }
        y = next;
    }
    Ok(PadicApprox::from_integer(&y, p, precision))
}

/// `lim_n x^(p^n)`: the Teichmuller representative for odd `p`; for `p = 2`
/// it is 1 on odd `x` and 0 on even `x`.
pub fn power_limit(x: &BigInt, p: u64, precision: u32) -> Result<PadicApprox, PadicError> {
    if p == 2 {
        let v = if x.is_odd() { 1 } else { 0 };
        return Ok(PadicApprox::from_i64(v, 2, precision));
    }
    teichmuller(x, p, precision)
}

/// p-adic logarithm of a principal unit (`u = 1 mod p`, or mod 4 for `p = 2`).
pub fn padic_log(u: &PadicApprox) -> Result<PadicApprox, PadicError> {
    let p = u.p;
    let k = u.precision;
    if u.valuation != Some(0) {
        return Err(PadicError::NotPrincipalUnit);
    }
    let x: BigInt = u.residue() - 1;
    let need = if p == 2 { 2 } else { 1 };
    if x.is_zero() {
        return Ok(PadicApprox::zero(p, k));
    }
    let w = split_p(&x, p).0;
    if w < need {
        return Err(PadicError::NotPrincipalUnit);
    }
    if w >= k as u64 {
        return Ok(PadicApprox::zero(p, k));
    }
    let m = big_pow(p, k);
    let mut sum = BigInt::zero();
    let mut i: u64 = 1;
    loop {
        let e = vp_u64(i, p);
        let val = i * w;
        if val > (k as u64) + ilog(i, p) as u64 {
            break;
        }
        if val < (k as u64) + e as u64 {
            let mk = big_pow(p, k + e);
            let term = x.modpow(&BigInt::from(i), &mk);
            let term = term / big_pow(p, e);
            let cofactor = BigInt::from(i / p.pow(e));
            let inv = mod_inverse(&cofactor, &m).expect("unit");
            let t = (term * inv).mod_floor(&m);
            if i % 2 == 1 {
                sum += t;
            } else {
                sum -= t;
            }
        }
        i += 1;
    }
    Ok(PadicApprox::from_integer(&sum, p, k))
}

/// Iwasawa logarithm of any p-adic unit: `log(u^(p-1)) / (p-1)` for odd `p`,
/// `log(u^2) / 2` for `p = 2`. The squaring for `p = 2` is carried out one
/// digit higher so that the halving loses nothing.
pub fn log_unit(u: &PadicApprox) -> Result<PadicApprox, PadicError> {
    let p = u.p;
    let k = u.precision;
    if u.valuation != Some(0) {
        return Err(PadicError::NotPrincipalUnit);
    }
    if p == 2 {
        let r = u.residue();
        let sq = PadicApprox::from_integer(&(&r * &r), 2, k + 1);
        let l = padic_log(&sq)?;
        return l.div(&PadicApprox::from_i64(2, 2, k + 1)).map(|q| q.truncate(k));
    }
    let r = u.residue();
    let m = big_pow(p, k);
    let pw = PadicApprox::from_integer(&r.modpow(&BigInt::from(p - 1), &m), p, k);
    padic_log(&pw)?.div(&PadicApprox::from_i64((p - 1) as i64, p, k))
}

/// `sign(x)` as `+-1`, for nonzero integers.
pub fn sign_of(x: &BigInt) -> i32 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_and_nonp() {
        assert_eq!(vp(&BigInt::from(48), 2).unwrap(), 4);
        assert_eq!(nonp_part(&BigInt::from(-48), 2).unwrap(), BigInt::from(-3));
        assert_eq!(vp(&BigInt::zero(), 3), Err(PadicError::ZeroValuation));
        assert_eq!(vp(&BigInt::from(5), 6), Err(PadicError::NotPrime(6)));
    }

    #[test]
    fn approx_formatting_and_arithmetic() {
        let a = PadicApprox::from_i64(12, 2, 5);
        assert_eq!(a.to_string(), "2^2 * 3 mod 2^5");
        assert_eq!(PadicApprox::from_i64(32, 2, 5).to_string(), "0 mod 2^5");
        let b = PadicApprox::from_ratio(&BigInt::from(1), &BigInt::from(3), 2, 6).unwrap();
        assert_eq!(b.mul(&PadicApprox::from_i64(3, 2, 6)).residue(), BigInt::one());
        assert_eq!(PadicApprox::from_i64(-1, 3, 2).residue(), BigInt::from(8));
        assert_eq!(PadicApprox::from_i64(-1, 3, 2).signed_residue(), BigInt::from(-1));
        let q = PadicApprox::from_i64(18, 3, 4).div(&PadicApprox::from_i64(6, 3, 4)).unwrap();
        assert_eq!(q.residue(), BigInt::from(3));
        assert_eq!(a.agreement(&PadicApprox::from_i64(12 + 16, 2, 5)), 4);
    }

    #[test]
    fn teichmuller_values() {
        // omega_5(2) is a primitive 4th root of unity congruent to 2 mod 5
        let w = teichmuller(&BigInt::from(2), 5, 6).unwrap();
        assert_eq!(w.residue().modpow(&BigInt::from(4), &big_pow(5, 6)), BigInt::one());
        assert_eq!(w.residue().mod_floor(&BigInt::from(5)), BigInt::from(2));
        assert_eq!(teichmuller(&BigInt::from(3), 2, 4).unwrap().signed_residue(), BigInt::from(-1));
        assert_eq!(teichmuller(&BigInt::from(5), 2, 4).unwrap().signed_residue(), BigInt::from(1));
        assert!(teichmuller(&BigInt::from(6), 3, 4).unwrap().is_zero());
        assert_eq!(power_limit(&BigInt::from(3), 2, 4).unwrap().residue(), BigInt::one());
    }

    #[test]
    fn log_is_additive() {
        for p in [2u64, 3, 5] {
            let k = 12;
            let base = if p == 2 { 4 } else { p as i64 };
            let a = PadicApprox::from_i64(1 + base, p, k);
            let b = PadicApprox::from_i64(1 + 2 * base, p, k);
            let la = padic_log(&a).unwrap();
            let lb = padic_log(&b).unwrap();
            let lab = padic_log(&a.mul(&b)).unwrap();
            assert_eq!(lab.residue(), la.add(&lb).residue(), "p = {p}");
        }
    }

    #[test]
    fn log_of_one_plus_p() {
        // log(1 + 3) mod 3^4 from the series 3 - 9/2 + 9 - 81/4 + ...
        let l = padic_log(&PadicApprox::from_i64(4, 3, 4)).unwrap();
        let m = big_pow(3, 4);
        let mut s = BigInt::zero();
        for i in 1..40i64 {
            let term = num_traits::pow(BigInt::from(3), i as usize);
            let (e, c) = split_p(&BigInt::from(i), 3);
            let term = term / big_pow(3, e as u32);
            let t = term * mod_inverse(&c, &m).unwrap();
            s += if i % 2 == 1 { t } else { -t };
        }
        assert_eq!(l.residue(), s.mod_floor(&m));
    }

    #[test]
    fn log_unit_kills_torsion() {
        let l = log_unit(&PadicApprox::from_i64(-1, 2, 10)).unwrap();
        assert!(l.is_zero());
        let w = teichmuller(&BigInt::from(3), 7, 8).unwrap();
        assert!(log_unit(&w).unwrap().is_zero());
        let x = PadicApprox::from_i64(3, 2, 10);
        let x2 = padic_log(&x.mul(&x)).unwrap();
        assert_eq!(log_unit(&x).unwrap().mul_int(&BigInt::from(2)).truncate(10).residue(), x2.truncate(10).residue());
    }
}
