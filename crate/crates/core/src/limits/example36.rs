use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{limit_estimate_with, LimitEstimate, LimitsError, MaskKind};
use crate::arith::{is_prime, vp_u64};
use crate::padic::{power_limit, teichmuller, PadicApprox};
use crate::poly::MultiPoly;
use crate::resultant::Budget;

/// `a t1^n + g(t2, ..., td)`, with `g` given in `d - 1` variables.
pub fn example36_poly(a: i64, n: u32, g: &MultiPoly) -> MultiPoly {
    let d = g.nvars() + 1;
    let mut lead = vec![0; d];
    lead[0] = n;
    let terms = std::iter::once((BigInt::from(a), lead)).chain(g.terms().map(|(m, c)| {
        let mut e = Vec::with_capacity(d);
        e.push(0);
        e.extend_from_slice(&m.0);
        (c.clone(), e)
    }));
    MultiPoly::from_terms(d, terms)
}

/// `Res(t^(p^N) - 1, a t^n + b)` in closed form.
///
/// With `v = v_p(n)` and `M = p^max(N - v, 0)` the value is
/// `(b^M - (-1)^M a^M)^(p^min(v, N))`.
pub fn binomial_cyclic_resultant(a: &BigInt, n: u64, b: &BigInt, p: u64, big_n: u32) -> BigInt {
    assert!(n >= 1);
    let v = vp_u64(n, p);
    let m = p.pow(big_n.saturating_sub(v));
    let base = if m % 2 == 1 {
        num_traits::pow(b.clone(), m as usize) + num_traits::pow(a.clone(), m as usize)
    } else {
        num_traits::pow(b.clone(), m as usize) - num_traits::pow(a.clone(), m as usize)
    };
    num_traits::pow(base, p.pow(v.min(big_n)) as usize)
}

/// Limit of `r_{n1, ..., nd}(a t1^n + g)` modulo `p^K`.
///
/// It is 0 when `p | f(1, ..., 1)`. Otherwise, when `g` involves at least one
/// variable, it is `omega_p(f(1, ..., 1))` for odd `p` and 1 for `p = 2`.
/// When `g = b` is constant the outer exponent stays `p^v_p(n)` and the limit
/// is `(lim b^(p^N) + lim a^(p^N))^(p^v_p(n))` for odd `p`, with a minus sign
/// for `p = 2`.
pub fn example36_closed_form(a: i64, n: u32, g: &MultiPoly, p: u64, precision: u32) -> Result<PadicApprox, LimitsError> {
    if !is_prime(p) {
        return Err(LimitsError::NotPrime(p));
    }
    if a == 0 || n == 0 {
        return Err(LimitsError::InvalidInput(format!("need a != 0 and n >= 1, got a = {a}, n = {n}")));
    }
    let f1 = g.eval_ones() + a;
    if f1.mod_floor(&BigInt::from(p)).is_zero() {
        return Ok(PadicApprox::zero(p, precision));
    }
    if g.nvars() > 0 {
        if p == 2 {
            return Ok(PadicApprox::from_i64(1, 2, precision));
        }
        return Ok(teichmuller(&f1, p, precision)?);
    }
    let b = g.as_constant().unwrap_or_else(BigInt::zero);
    let lim_b = power_limit(&b, p, precision)?;
    let lim_a = power_limit(&BigInt::from(a), p, precision)?;
    let base = if p == 2 { lim_b.sub(&lim_a) } else { lim_b.add(&lim_a) };
    let m = base.modulus();
    let e = num_traits::pow(BigInt::from(p), vp_u64(n as u64, p) as usize);
    Ok(PadicApprox::from_integer(&base.residue().modpow(&e, &m), p, precision))
}

/// Closed form next to the diagonal estimate of the same limit.
#[derive(Clone, Debug)]
pub struct Example36Check {
    pub closed: PadicApprox,
    pub estimate: LimitEstimate,
    pub agrees: bool,
}

/// Computes both the closed form and `limit_estimate` at `K` digits and
/// compares them on the certified digits.
pub fn example36_verify(
    a: i64,
    n: u32,
    g: &MultiPoly,
    p: u64,
    precision: u32,
    budget: &Budget,
) -> Result<Example36Check, LimitsError> {
    let closed = example36_closed_form(a, n, g, p, precision)?;
    let f = example36_poly(a, n, g);
    let estimate = limit_estimate_with(&f, p, precision, MaskKind::R, budget)?;
    let digits = estimate.raw_certified.digits().unwrap_or(precision);
    let agrees = closed.eq_mod(&estimate.raw, digits);
    Ok(Example36Check { closed, estimate, agrees })
}
