use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::spec::LinkSpec;
use super::LinkError;
use crate::arith::{big_pow, bit_len, is_prime, split_p};
use crate::hp::Fixed;
use crate::limits::{limit_estimate_with, predicted_sign, Certified, LimitEstimate, MaskKind};
use crate::padic::PadicApprox;
use crate::poly::IntPoly;
use crate::resultant::{cyclic_resultant_with, resultant_prs, Budget, CyclicRequest};

/// The covering `Gamma = (+)_i p^(n_i) Z_p`, with quotient `(+)_i Z/p^(n_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSpec {
    pub p: u64,
    pub levels: Vec<u32>,
}

impl CoveringSpec {
    pub fn new(p: u64, levels: Vec<u32>) -> Result<Self, LinkError> {
        if !is_prime(p) {
            return Err(LinkError::InvalidCovering(format!("{p} is not prime")));
        }
        if levels.is_empty() || levels.contains(&0) {
            return Err(LinkError::InvalidCovering(format!("levels must be positive, got {levels:?}")));
        }
        Ok(CoveringSpec { p, levels })
    }

    pub fn diagonal(p: u64, d: usize, n: u32) -> Result<Self, LinkError> {
        Self::new(p, vec![n; d])
    }

    fn check(&self, link: &LinkSpec) -> Result<(), LinkError> {
        if self.levels.len() != link.d {
            return Err(LinkError::InvalidCovering(format!(
                "{} levels for a link with {} components",
                self.levels.len(),
                link.d
            )));
        }
        Self::new(self.p, self.levels.clone()).map(|_| ())
    }

    /// `|G| = p^(n_1 + ... + n_d)`.
    pub fn group_order(&self) -> BigInt {
        big_pow(self.p, self.levels.iter().sum())
    }
}

/// `|H_1(M_Gamma; Z)|`, with 0 standing for an infinite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Result {
    pub order: BigInt,
    pub nonp_part: BigInt,
    pub p_exponent: u64,
}

#[derive(Serialize)]
struct H1Json {
    order: String,
    nonp: String,
    p_exponent: u64,
}

impl H1Result {
    pub fn from_order(order: BigInt, p: u64) -> Self {
        if order.is_zero() {
            return H1Result { order, nonp_part: BigInt::zero(), p_exponent: 0 };
        }
        let (e, u) = split_p(&order, p);
        H1Result { order, nonp_part: u, p_exponent: e }
    }

    /// `false` when `H_1` is infinite.
    pub fn is_rational_homology_sphere(&self) -> bool {
        !self.order.is_zero()
    }

    /// `{"order": "<decimal>", "nonp": "<decimal>", "p_exponent": <int>}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&H1Json {
            order: self.order.to_string(),
            nonp: self.nonp_part.to_string(),
            p_exponent: self.p_exponent,
        })
        .expect("serializable")
    }
}

fn sublink_levels(indices: &[usize], levels: &[u32]) -> Vec<u32> {
    indices.iter().map(|&i| levels[i - 1]).collect()
}

/// `prod_i prod_{zeta^(p^n_i) = 1, zeta != 1} (1 - zeta)`, computed as resultants.
fn meridian_denominator(p: u64, levels: &[u32]) -> BigInt {
    levels
        .iter()
        .map(|&n| {
            let big_n = p.pow(n) as usize;
            let reduced = IntPoly::from_big(vec![BigInt::one(); big_n]);
            resultant_prs(&reduced, &IntPoly::from_i64(&[1, -1]))
        })
        .product()
}

/// Homology order with the default budget.
pub fn h1_order(link: &LinkSpec, cov: &CoveringSpec) -> Result<H1Result, LinkError> {
    h1_order_with(link, cov, &Budget::default())
}

/// Product over nonempty sublinks `S` of `|r'_{(n_i), i in S}(Delta_S)|`.
///
/// The prefactor `|G| / prod |1 - xi(m_i)|` is checked to equal 1, and the
/// sign of each `r'` is checked against its prediction.
pub fn h1_order_with(link: &LinkSpec, cov: &CoveringSpec, budget: &Budget) -> Result<H1Result, LinkError> {
    cov.check(link)?;
    let group = cov.group_order();
    let denominator = meridian_denominator(cov.p, &cov.levels);
    if group != denominator {
        return Err(LinkError::PrefactorMismatch { group: group.to_string(), denominator: denominator.to_string() });
    }
    let entries: Vec<(&Vec<usize>, &crate::poly::MultiPoly)> = link.sublinks().collect();
    let factors: Vec<Result<BigInt, LinkError>> = entries
        .par_iter()
        .map(|(idx, f)| {
            let req = CyclicRequest::rprime((*f).clone(), cov.p, sublink_levels(idx, &cov.levels))?;
            let r = cyclic_resultant_with(&req, budget)?;
            if !r.is_zero() {
                let predicted = predicted_sign(f, cov.p, MaskKind::RPrime)?;
                let found = if r.is_negative() { -1 } else { 1 };
                if found != predicted {
                    return Err(LinkError::SignMismatch { indices: (*idx).clone(), found, predicted });
                }
            }
            Ok(r.abs())
        })
        .collect();
    let mut order = BigInt::one();
    for f in factors {
        order *= f?;
    }
    Ok(H1Result::from_order(order, cov.p))
}

/// Limit of the non-p parts with the default budget.
pub fn h1_nonp_limit(link: &LinkSpec, p: u64, precision: u32) -> Result<LimitEstimate, LinkError> {
    h1_nonp_limit_with(link, p, precision, &Budget::default())
}

/// `h(M, L)`: product over sublinks of the sign-corrected `r'` limit estimates
/// along the diagonal. Certified digits are the minimum over the factors.
pub fn h1_nonp_limit_with(link: &LinkSpec, p: u64, precision: u32, budget: &Budget) -> Result<LimitEstimate, LinkError> {
    let entries: Vec<(&Vec<usize>, &crate::poly::MultiPoly)> = link.sublinks().collect();
    let estimates: Vec<Result<(i32, LimitEstimate), LinkError>> = entries
        .par_iter()
        .map(|(_, f)| {
            let e = limit_estimate_with(f, p, precision, MaskKind::RPrime, budget)?;
            let s = predicted_sign(f, p, MaskKind::RPrime)?;
            Ok((s, e))
        })
        .collect();
    let mut raw = PadicApprox::from_i64(1, p, precision);
    let mut nonp = PadicApprox::from_i64(1, p, precision);
    let mut zero_limit = false;
    let mut raw_digits = precision;
    let mut nonp_digits = precision;
    let mut stabilized = true;
    let mut levels_used = Vec::new();
    let mut valuations: Vec<u64> = Vec::new();
    for item in estimates {
        let (s, e) = item?;
        let sign = PadicApprox::from_i64(s as i64, p, precision);
        zero_limit |= e.zero_limit;
        if let Certified::Digits(k) = e.raw_certified {
            raw_digits = raw_digits.min(k);
        }
        nonp_digits = nonp_digits.min(e.nonp_certified);
        stabilized &= e.stabilized;
        raw = raw.mul(&e.raw.mul(&sign));
        nonp = nonp.mul(&e.nonp.mul(&sign));
        if valuations.is_empty() {
            valuations = vec![0; e.valuations.len()];
            levels_used = e.levels_used.clone();
        }
        for (acc, v) in valuations.iter_mut().zip(&e.valuations) {
            *acc += v;
        }
    }
    let (raw, raw_certified) = if zero_limit {
        (PadicApprox::zero(p, precision), Certified::Exact)
    } else {
        (raw.truncate(raw_digits), Certified::Digits(raw_digits))
    };
    Ok(LimitEstimate {
        p,
        kind: MaskKind::RPrime,
        levels_used,
        valuations,
        zero_limit,
        raw,
        raw_certified,
        nonp: nonp.truncate(nonp_digits),
        nonp_certified: nonp_digits,
        stabilized: stabilized && !zero_limit,
    })
}

/// Largest `|G|` the character oracle accepts.
pub const ORACLE_GROUP_LIMIT: u64 = 4096;

/// Literal Mayberry-Murasugi/Porti product over all characters of `G`,
/// evaluated in high-precision complex arithmetic and rounded.
pub fn character_oracle(link: &LinkSpec, cov: &CoveringSpec) -> Result<H1Result, LinkError> {
    cov.check(link)?;
    let p = cov.p;
    let sizes: Vec<u64> = cov.levels.iter().map(|&n| p.pow(n)).collect();
    let order: u64 = sizes.iter().product();
    if order > ORACLE_GROUP_LIMIT {
        return Err(LinkError::OracleScale { order, limit: ORACLE_GROUP_LIMIT });
    }
    let top = *cov.levels.iter().max().unwrap();
    let root_order = p.pow(top);
    let norm_bits: u64 = link.sublinks().map(|(_, f)| bit_len(&f.l1_norm())).max().unwrap_or(1);
    let log_count = 64 - (order * root_order).leading_zeros() as u64;
    let mut bits = ((order * norm_bits + 2 * log_count + 64) as u32).max(80);
    for attempt in 0..3 {
        let fx = Fixed::new(bits);
        let table = fx.root_table(root_order);
        let mut num = fx.one();
        let mut den = fx.one();
        for c in 0..order {
            let mut rest = c;
            let u: Vec<u64> = sizes
                .iter()
                .map(|&s| {
                    let x = rest % s;
                    rest /= s;
                    x
                })
                .collect();
            let support: Vec<usize> = (0..u.len()).filter(|&i| u[i] != 0).collect();
            if support.is_empty() {
                continue;
            }
            // xi(m_i) = exp(2 pi i u_i / p^n_i), as an exponent of the top-level root
            let expo: Vec<u64> = support.iter().map(|&i| u[i] * (root_order / sizes[i])).collect();
            if support.len() == 1 {
                den = fx.mul(&den, &fx.sub(&fx.one(), &table[expo[0] as usize]));
            }
            let key: Vec<usize> = support.iter().map(|&i| i + 1).collect();
            let f = link.alexander(&key).expect("complete spec");
            let mut val = fx.zero();
            for (m, coef) in f.terms() {
                let s = m.0.iter().zip(&expo).fold(0u64, |acc, (&a, &b)| (acc + a as u64 % root_order * b) % root_order);
                val = fx.add(&val, &fx.scale(&table[s as usize], coef));
            }
            num = fx.mul(&num, &val);
        }
        let abs_num = fx.abs(&num);
        let abs_den = fx.abs(&den);
        let value = ((abs_num * BigInt::from(order)) << bits) / abs_den;
        let (n, err) = fx.round(&value);
        if err < 0.25 {
            return Ok(H1Result::from_order(n, p));
        }
        if attempt == 2 {
            return Err(LinkError::OracleImprecise { bits, residual: err });
        }
        bits = bits.saturating_mul(2);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{trefoil, whitehead_link};

    #[test]
    fn trefoil_double_cover() {
        let t = trefoil();
        let h = h1_order(&t, &CoveringSpec::new(2, vec![1]).unwrap()).unwrap();
        assert_eq!(h.order, BigInt::from(3));
        assert_eq!(character_oracle(&t, &CoveringSpec::new(2, vec![1]).unwrap()).unwrap(), h);
    }

    #[test]
    fn whitehead_small_orders() {
        let l2 = whitehead_link(2).unwrap();
        assert_eq!(h1_order(&l2, &CoveringSpec::new(2, vec![1, 1]).unwrap()).unwrap().order, BigInt::from(4));
        let l1 = whitehead_link(1).unwrap();
        let cov = CoveringSpec::new(3, vec![1, 1]).unwrap();
        let h = h1_order(&l1, &cov).unwrap();
        assert_eq!(h.order, BigInt::from(4));
        assert_eq!(character_oracle(&l1, &cov).unwrap(), h);
    }

    #[test]
    fn json_shape() {
        let h = H1Result::from_order(BigInt::from(12), 2);
        assert_eq!(h.to_json(), r#"{"order":"12","nonp":"3","p_exponent":2}"#);
        let z = H1Result::from_order(BigInt::zero(), 3);
        assert!(!z.is_rational_homology_sphere());
    }

    #[test]
    fn bad_coverings() {
        assert!(CoveringSpec::new(4, vec![1]).is_err());
        assert!(CoveringSpec::new(3, vec![0]).is_err());
        let t = trefoil();
        assert!(h1_order(&t, &CoveringSpec::new(3, vec![1, 1]).unwrap()).is_err());
        assert!(matches!(
            character_oracle(&t, &CoveringSpec::new(2, vec![13]).unwrap()),
            Err(LinkError::OracleScale { .. })
        ));
    }
}
