use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

fn exact(a: BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
    q
}

/// Integer resultant by the subresultant pseudo-remainder sequence.
///
/// Same convention as the Sylvester determinant: `Res(f, g) = lc(f)^deg g * prod g(alpha)`.
pub fn resultant_prs(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if a.degree() < b.degree() {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let ca = a.content();
    let cb = b.content();
    let (da0, db0) = (a.degree().unwrap(), b.degree().unwrap());
    let t = pow(&ca, db0) * pow(&cb, da0);
    a = IntPoly::from_big(a.coeffs().iter().map(|c| exact(c.clone(), &ca)).collect());
    b = IntPoly::from_big(b.coeffs().iter().map(|c| exact(c.clone(), &cb)).collect());
    if db0 == 0 {
        // b is a unit-content constant, i.e. +-1
        return sign * t * pow(&b.coeffs()[0], da0);
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let div = &gg * pow(&h, delta);
        b = IntPoly::from_big(r.coeffs().iter().map(|c| exact(c.clone(), &div)).collect());
        gg = a.leading().unwrap().clone();
        h = if delta == 0 { h } else { exact(pow(&gg, delta), &pow(&h, delta - 1)) };
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            let lb = b.leading().unwrap();
            let hh = exact(pow(lb, da), &pow(&h, da - 1));
            return sign * t * hh;
        }
    }
}

/// `Res(f, g)` for `deg g` much larger than `deg f`, by first reducing `g`
/// modulo `f` with a pseudo-remainder.
pub fn resultant_reduced(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if dg < df || df == 0 {
        return resultant_prs(f, g);
    }
    let lc = f.leading().unwrap().clone();
    let r = g.pseudo_rem(f);
    let Some(dr) = r.degree() else {
        return BigInt::zero();
    };
    // lc^e g = q f + r with e = dg - df + 1, so Res(f, g) = lc^(dg - dr) Res(f, r) / lc^(e df).
    let e = dg - df + 1;
    let num = pow(&lc, dg - dr) * resultant_prs(f, &r);
    exact(num, &pow(&lc, e * df))
}
