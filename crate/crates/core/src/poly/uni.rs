use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;

/// Dense univariate polynomial, coefficients stored from the constant term up.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and `degree()` is `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<C: Ring> {
    coeffs: Vec<C>,
    zero: C,
}

impl<C: Ring> UniPoly<C> {
    /// Builds a polynomial; `zero` fixes the coefficient ring context.
    pub fn from_coeffs(mut coeffs: Vec<C>, zero: C) -> Self {
        while coeffs.last().is_some_and(|c| c.ring_is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, zero }
    }

    pub fn zero_in(zero: C) -> Self {
        UniPoly { coeffs: Vec::new(), zero }
    }

    pub fn constant(c: C) -> Self {
        let zero = c.ring_zero();
        Self::from_coeffs(vec![c], zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn zero_coeff(&self) -> &C {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| self.coeff(i).ring_add(&rhs.coeff(i))).collect();
        Self::from_coeffs(out, self.zero.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| self.coeff(i).ring_sub(&rhs.coeff(i))).collect();
        Self::from_coeffs(out, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        let out = self.coeffs.iter().map(|c| c.ring_neg()).collect();
        Self::from_coeffs(out, self.zero.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero_in(self.zero.clone());
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Self::from_coeffs(out, self.zero.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        let out = self.coeffs.iter().map(|a| a.ring_mul(c)).collect();
        Self::from_coeffs(out, self.zero.clone())
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.zero.clone(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(out, self.zero.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant(self.zero.ring_one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.ring_mul(x).ring_add(c);
        }
        acc
    }
}

pub type IntPoly = UniPoly<BigInt>;

impl UniPoly<BigInt> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::zero())
    }

    pub fn from_big(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs, BigInt::zero())
    }

    /// `t^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::from_big(c)
    }

    /// Gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `f(1 + s)` as a polynomial in `s`.
    pub fn shift_one(&self) -> Self {
        let mut acc: Vec<BigInt> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (s + 1) + c
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            next[0] += c;
            acc = next;
        }
        Self::from_big(acc)
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f mod g`.
    ///
    /// Panics if `g` is zero.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo_rem by zero polynomial");
        let lc = g.leading().unwrap().clone();
        let Some(df) = self.degree() else {
            return self.clone();
        };
        if df < dg {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        let mut steps = df - dg + 1;
        let mut top = df as isize;
        while top >= dg as isize {
            let t = top as usize;
            let c = r[t].clone();
            for x in r.iter_mut().take(t + 1) {
                *x *= &lc;
            }
            if !c.is_zero() {
                for (k, gk) in g.coeffs.iter().enumerate() {
                    r[t - dg + k] -= &c * gk;
                }
            }
            debug_assert!(r[t].is_zero());
            r.truncate(t);
            steps -= 1;
            top -= 1;
        }
        debug_assert_eq!(steps, 0);
        Self::from_big(r)
    }

    /// Quotient and remainder by a monic divisor.
    ///
    /// Panics if `g` is zero or not monic.
    pub fn div_rem_monic(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree().expect("division by zero polynomial");
        assert!(g.leading().unwrap().is_one(), "divisor must be monic");
        let Some(df) = self.degree() else {
            return (self.clone(), self.clone());
        };
        if df < dg {
            return (Self::from_big(vec![]), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dg + 1];
        for t in (dg..=df).rev() {
            let c = std::mem::take(&mut r[t]);
            if !c.is_zero() {
                for (k, gk) in g.coeffs.iter().enumerate().take(dg) {
                    r[t - dg + k] -= &c * gk;
                }
            }
            q[t - dg] = c;
        }
        r.truncate(dg);
        (Self::from_big(q), Self::from_big(r))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.eval(x)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for UniPoly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_one_matches_binomial_expansion() {
        // t^2 at t = 1 + s is 1 + 2s + s^2
        let f = IntPoly::from_i64(&[0, 0, 1]);
        assert_eq!(f.shift_one(), IntPoly::from_i64(&[1, 2, 1]));
        let g = IntPoly::from_i64(&[-6, 1]);
        assert_eq!(g.shift_one(), IntPoly::from_i64(&[-5, 1]));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let f = IntPoly::from_i64(&[1, 0, 0, 0, 1]);
        let g = IntPoly::from_i64(&[1, 3]);
        let r = f.pseudo_rem(&g);
        // 3^4 * f(-1/3) = 81 * (1 + 1/81) = 82
        assert_eq!(r, IntPoly::from_i64(&[82]));
    }

    #[test]
    fn display_is_descending() {
        let f = IntPoly::from_i64(&[-1, 0, 3, -1]);
        assert_eq!(f.to_string(), "-t^3 + 3*t^2 - 1");
    }
}
