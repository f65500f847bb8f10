use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LimitsError;
use crate::arith::{is_prime, split_p};
use crate::padic::PadicApprox;
use crate::poly::MultiPoly;
use crate::resultant::{cyclic_resultant_with, Budget, CyclicRequest, FactorMask};

/// Full divisor `t^(p^n) - 1` or the reduced one `(t^(p^n) - 1) / (t - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaskKind {
    R,
    RPrime,
}

impl MaskKind {
    pub fn mask(self, levels: &[u32]) -> FactorMask {
        match self {
            MaskKind::R => FactorMask::full(levels),
            MaskKind::RPrime => FactorMask::rprime(levels),
        }
    }

    pub fn request(self, f: &MultiPoly, p: u64, levels: Vec<u32>) -> Result<CyclicRequest, LimitsError> {
        let mask = self.mask(&levels);
        Ok(CyclicRequest::new(f.clone(), p, levels, mask)?)
    }
}

/// How many p-adic digits of a limit are guaranteed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certified {
    Digits(u32),
    /// The value is known exactly (the zero limit).
    Exact,
}

impl Certified {
    pub fn digits(self) -> Option<u32> {
        match self {
            Certified::Digits(k) => Some(k),
            Certified::Exact => None,
        }
    }
}

/// p-adic limit of `r` (or `r'`) along the diagonal, and of its non-p parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitEstimate {
    pub p: u64,
    pub kind: MaskKind,
    /// Diagonal levels at which resultants were evaluated, ascending.
    pub levels_used: Vec<u32>,
    /// `v_p` of the resultant at each level in `levels_used`.
    pub valuations: Vec<u64>,
    pub zero_limit: bool,
    pub raw: PadicApprox,
    pub raw_certified: Certified,
    pub nonp: PadicApprox,
    pub nonp_certified: u32,
    /// `v_p` stayed constant over the final two evaluated levels.
    pub stabilized: bool,
}

/// `true` iff the limit of `r_n(f)` is 0, i.e. `p | f(1, ..., 1)`.
pub fn zero_limit_predicate(f: &MultiPoly, p: u64) -> Result<bool, LimitsError> {
    if !is_prime(p) {
        return Err(LimitsError::NotPrime(p));
    }
    Ok(f.eval_ones().mod_floor(&BigInt::from(p)).is_zero())
}

/// Predicted sign of `r` (or `r'`) at any positive levels.
///
/// Norms from the totally imaginary fields `Q(zeta_{p^j})`, `p^j > 2`, are
/// positive, so only the real points `t_i = +-1` matter.
pub fn predicted_sign(f: &MultiPoly, p: u64, kind: MaskKind) -> Result<i32, LimitsError> {
    if !is_prime(p) {
        return Err(LimitsError::NotPrime(p));
    }
    let d = f.nvars();
    let v = match (kind, p) {
        (MaskKind::R, 2) => {
            let req = CyclicRequest::full(f.clone(), 2, vec![1; d])?;
            cyclic_resultant_with(&req, &Budget::default())?
        }
        (MaskKind::R, _) => f.eval_ones(),
        (MaskKind::RPrime, 2) => f.eval_minus_ones(),
        (MaskKind::RPrime, _) => return Ok(1),
    };
    if v.is_zero() {
        return Err(LimitsError::VanishingResultant { levels: vec![1; d] });
    }
    Ok(if v.is_negative() { -1 } else { 1 })
}

fn eval_diag(f: &MultiPoly, p: u64, level: u32, kind: MaskKind, budget: &Budget) -> Result<BigInt, LimitsError> {
    let levels = vec![level; f.nvars()];
    let req = kind.request(f, p, levels.clone())?;
    let r = cyclic_resultant_with(&req, budget)?;
    if r.is_zero() {
        return Err(LimitsError::VanishingResultant { levels });
    }
    Ok(r)
}

/// Limit estimate with the default budget.
pub fn limit_estimate(f: &MultiPoly, p: u64, precision: u32, kind: MaskKind) -> Result<LimitEstimate, LimitsError> {
    limit_estimate_with(f, p, precision, kind, &Budget::default())
}

/// Evaluates the resultant at the diagonal levels `K - 1` and `K`.
///
/// When `p` does not divide `f(1, ..., 1)`, every resultant is a p-adic unit
/// and the level-`K` value is congruent to the limit modulo `p^K`, so `K`
/// digits are certified (the `K - 1` value is checked against it). Otherwise
/// the limit is exactly 0 and the non-p parts are certified to `K` digits
/// provided the two levels agree to at least `K - 1` digits; if not, only the
/// observed agreement is certified.
pub fn limit_estimate_with(
    f: &MultiPoly,
    p: u64,
    precision: u32,
    kind: MaskKind,
    budget: &Budget,
) -> Result<LimitEstimate, LimitsError> {
    if precision == 0 {
        return Err(LimitsError::InvalidPrecision(precision));
    }
    if f.is_zero() {
        return Err(LimitsError::ZeroPolynomial);
    }
    let zero_limit = zero_limit_predicate(f, p)?;
    let top = precision;
    let lows: Vec<u32> = if top >= 2 { vec![top - 1, top] } else { vec![top] };
    let mut values = Vec::with_capacity(lows.len());
    for &n in &lows {
        values.push(eval_diag(f, p, n, kind, budget)?);
    }
    let split: Vec<(u64, BigInt)> = values.iter().map(|v| split_p(v, p)).collect();
    let valuations: Vec<u64> = split.iter().map(|s| s.0).collect();
    let last = split.last().unwrap();
    let nonp_top = PadicApprox::from_integer(&last.1, p, top);
    let stabilized = valuations.windows(2).all(|w| w[0] == w[1]);
    if zero_limit {
        let nonp_certified = match split.len() {
            1 => top,
            _ => {
                let prev = PadicApprox::from_integer(&split[0].1, p, top);
                let agree = prev.agreement(&nonp_top);
                if agree + 1 >= top {
                    top
                } else {
                    agree
                }
            }
        };
        Ok(LimitEstimate {
            p,
            kind,
            levels_used: lows,
            valuations,
            zero_limit,
            raw: PadicApprox::zero(p, top),
            raw_certified: Certified::Exact,
            nonp: nonp_top.truncate(nonp_certified),
            nonp_certified,
            stabilized: false,
        })
    } else {
        if split.len() == 2 {
            let prev = PadicApprox::from_integer(&values[0], p, top - 1);
            let cur = PadicApprox::from_integer(&values[1], p, top - 1);
            if prev != cur {
                return Err(LimitsError::CongruenceViolated { levels: lows.clone() });
            }
        }
        let raw = PadicApprox::from_integer(&values[values.len() - 1], p, top);
        Ok(LimitEstimate {
            p,
            kind,
            levels_used: lows,
            valuations,
            zero_limit,
            raw: raw.clone(),
            raw_certified: Certified::Digits(top),
            nonp: raw,
            nonp_certified: top,
            stabilized,
        })
    }
}
