use num_bigint::BigInt;
use num_traits::Zero;

use super::LimitsError;
use crate::arith::{is_prime, split_p};
use crate::poly::{newton_polygon, IntPoly};
use crate::resultant::resultant_reduced;

/// Invariants in `e_n = lambda n + mu p^n + nu`, valid for `n` in `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IwasawaInvariants {
    pub lambda: u64,
    pub mu: u64,
    pub nu: i64,
    /// Inclusive range of levels on which the law holds exactly.
    pub window: (u32, u32),
    /// `e_n = v_p(Res(t^(p^n) - 1, f))` for `n = 0..=n_max`.
    pub exponents: Vec<u64>,
}

/// `Res(t^(p^n) - 1, f)` by reducing `t^(p^n) - 1` modulo `f`.
pub fn univariate_cyclic_resultant(f: &IntPoly, p: u64, n: u32) -> BigInt {
    let big_n = p.pow(n) as usize;
    let g = IntPoly::x_pow_minus_one(big_n);
    // Res(g, f) = (-1)^(deg g deg f) Res(f, g)
    let r = resultant_reduced(f, &g);
    let df = f.degree().unwrap_or(0);
    if (big_n * df) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Fits `lambda, mu, nu` from the exact exponents at `n = 0..=n_max`.
///
/// The three trailing levels determine the law; the window is then extended
/// downwards as far as it keeps holding.
pub fn iwasawa_fit(f: &IntPoly, p: u64, n_max: u32) -> Result<IwasawaInvariants, LimitsError> {
    if !is_prime(p) {
        return Err(LimitsError::NotPrime(p));
    }
    if f.is_zero() {
        return Err(LimitsError::ZeroPolynomial);
    }
    if n_max < 2 {
        return Err(LimitsError::WindowTooShort { n_max });
    }
    let mut exps = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let r = univariate_cyclic_resultant(f, p, n);
        if r.is_zero() {
            return Err(LimitsError::VanishingResultant { levels: vec![n] });
        }
        exps.push(split_p(&r, p).0);
    }
    let e = |n: u32| exps[n as usize] as i128;
    let pp = |n: u32| (p as i128).pow(n);
    let a = n_max - 2;
    let d1 = e(a + 1) - e(a);
    let d2 = e(a + 2) - e(a + 1);
    let denom = pp(a) * (p as i128 - 1).pow(2);
    let diff = d2 - d1;
    if diff < 0 || diff % denom != 0 {
        return Err(LimitsError::FitFailed { n_max });
    }
    let mu = diff / denom;
    let lambda = d1 - mu * pp(a) * (p as i128 - 1);
    if lambda < 0 {
        return Err(LimitsError::FitFailed { n_max });
    }
    let nu = e(a) - lambda * a as i128 - mu * pp(a);
    let holds = |n: u32| e(n) == lambda * n as i128 + mu * pp(n) + nu;
    let mut start = a;
    while start > 0 && holds(start - 1) {
        start -= 1;
    }
    Ok(IwasawaInvariants {
        lambda: lambda as u64,
        mu: mu as u64,
        nu: nu as i64,
        window: (start, n_max),
        exponents: exps,
    })
}

/// `(lambda, mu)` from the polynomial alone: `mu` is the p-adic valuation of
/// the content and `lambda` counts roots `alpha` with `|alpha - 1|_p < 1`,
/// read off the Newton polygon of `f(1 + s) / p^mu`.
pub fn lambda_mu_structural(f: &IntPoly, p: u64) -> Result<(u64, u64), LimitsError> {
    if !is_prime(p) {
        return Err(LimitsError::NotPrime(p));
    }
    if f.is_zero() {
        return Err(LimitsError::ZeroPolynomial);
    }
    if f.eval_int(&BigInt::from(1)).is_zero() {
        return Err(LimitsError::VanishingResultant { levels: vec![0] });
    }
    let mu = split_p(&f.content(), p).0;
    let shifted = f.shift_one();
    let np = newton_polygon(&shifted, p).expect("nonzero");
    Ok((np.positive_valuation_roots() as u64, mu))
}
