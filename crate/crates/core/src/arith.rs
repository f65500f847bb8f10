//! Small integer helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Deterministic primality test by trial division; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e` as `u64`, `None` on overflow.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// `p^e` as a big integer.
pub fn big_pow(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// Euler phi of `p^j` for prime `p`.
pub fn phi_prime_power(p: u64, j: u32) -> u64 {
    if j == 0 {
        1
    } else {
        (p - 1) * p.pow(j - 1)
    }
}

/// `v_p(n)` for a positive machine integer.
pub fn vp_u64(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Largest `e` with `p^e <= n`, for `n >= 1`.
pub fn ilog(n: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut acc = 1u64;
    while let Some(next) = acc.checked_mul(p) {
        if next > n {
            break;
        }
        acc = next;
        e += 1;
    }
    e
}

/// Splits a nonzero integer as `p^v * u` with `p` not dividing `u`.
pub fn split_p(x: &BigInt, p: u64) -> (u64, BigInt) {
    debug_assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut u = x.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = u.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        u = q;
        v += 1;
    }
    (v, u)
}

/// Least non-negative residue.
pub fn mod_floor(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let g = a.extended_gcd(m);
    if !g.gcd.abs().is_one() {
        return None;
    }
    let inv = if g.gcd.is_negative() { -g.x } else { g.x };
    Some(inv.mod_floor(m))
}

/// Number of bits needed for `|x|`, at least 1.
pub fn bit_len(x: &BigInt) -> u64 {
    x.bits().max(1)
}
