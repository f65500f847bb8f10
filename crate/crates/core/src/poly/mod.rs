//! Integer polynomials: sparse multivariate, dense univariate, parsing,
//! cyclotomic polynomials of prime-power order and Newton polygons.

mod multi;
mod newton;
mod parse;
mod ring;
mod uni;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use multi::{Monomial, MultiPoly};
pub use newton::{coefficient_valuations, newton_polygon, NewtonPolygon, Segment};
pub use parse::{max_variable_index, parse_poly, parse_poly_with_limit, ParseError, DEFAULT_MAX_EXPONENT};
pub use ring::{ExactDiv, Ring};
pub use uni::{IntPoly, UniPoly};

use crate::arith::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p^j = {p}^{j} exceeds the supported range")]
    TooLarge { p: u64, j: u32 },
}

/// `Phi_{p^j}(t) = sum_{k<p} t^(k p^(j-1))` for `j >= 1`, and `t - 1` for `j = 0`.
pub fn cyclotomic(p: u64, j: u32) -> Result<IntPoly, PolyError> {
    if !is_prime(p) {
        return Err(PolyError::NotPrime(p));
    }
    if j == 0 {
        return Ok(IntPoly::from_i64(&[-1, 1]));
    }
    let q = p.checked_pow(j - 1).filter(|&q| q.checked_mul(p).is_some()).ok_or(PolyError::TooLarge { p, j })?;
    let q = usize::try_from(q).map_err(|_| PolyError::TooLarge { p, j })?;
    let deg = (p as usize - 1) * q;
    let mut c = vec![BigInt::zero(); deg + 1];
    for k in 0..p as usize {
        c[k * q] = BigInt::from(1);
    }
    Ok(IntPoly::from_big(c))
}

/// Product of `Phi_{p^j}` over `j` in `mask`.
pub fn cyclotomic_product(p: u64, mask: &[u32]) -> Result<IntPoly, PolyError> {
    let mut acc = IntPoly::from_i64(&[1]);
    for &j in mask {
        acc = acc.mul(&cyclotomic(p, j)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_cases() {
        assert_eq!(cyclotomic(2, 1).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3, 2).unwrap(), IntPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic(2, 3).unwrap().degree(), Some(4));
        assert_eq!(cyclotomic(4, 1), Err(PolyError::NotPrime(4)));
    }

    #[test]
    fn full_product_is_x_pow_minus_one() {
        for (p, n) in [(2u64, 4u32), (3, 2), (5, 2), (7, 1)] {
            let all: Vec<u32> = (0..=n).collect();
            let prod = cyclotomic_product(p, &all).unwrap();
            assert_eq!(prod, IntPoly::x_pow_minus_one(p.pow(n) as usize));
        }
    }
}
