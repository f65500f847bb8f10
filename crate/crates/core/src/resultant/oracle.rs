use num_bigint::BigInt;
use num_traits::One;

use super::cyclic::CyclicRequest;
use super::ResultantError;
use crate::arith::{bit_len, vp_u64};
use crate::hp::Fixed;

/// Evaluates the request as a literal product of `f` over root-of-unity
/// tuples in high-precision complex arithmetic, then rounds.
///
/// Precision is chosen from an a priori bound on the product and doubled if
/// the result is not within 1/4 of an integer.
pub fn root_product_oracle(req: &CyclicRequest) -> Result<BigInt, ResultantError> {
    let p = req.p;
    let top = req.levels.iter().copied().max().unwrap_or(0);
    let order = p.pow(top);
    // Exponent offsets a_i in Z/p^{n_i}, kept only if their order's index is masked.
    let per_var: Vec<Vec<u64>> = req
        .levels
        .iter()
        .zip(req.mask.sets())
        .map(|(&n, set)| {
            let m = p.pow(n);
            (0..m)
                .filter(|&a| {
                    let j = if a == 0 { 0 } else { n - vp_u64(a, p) };
                    set.contains(&j)
                })
                .map(|a| a * p.pow(top - n))
                .collect()
        })
        .collect();
    let count: u64 = per_var.iter().map(|v| v.len() as u64).product();
    if count == 0 {
        return Ok(BigInt::one());
    }
    let norm_bits = bit_len(&req.f.l1_norm());
    let bound_bits = count * norm_bits;
    let log_count = 64 - (count * order).leading_zeros() as u64;
    let mut bits = (bound_bits + 2 * log_count + 64) as u32;
    let terms: Vec<(Vec<u64>, &BigInt)> = req.f.terms().map(|(m, c)| (m.0.iter().map(|&e| e as u64).collect(), c)).collect();
    for attempt in 0..3 {
        let fx = Fixed::new(bits);
        let table = fx.root_table(order);
        let mut acc = fx.one();
        let mut idx = vec![0usize; per_var.len()];
        'outer: loop {
            let e: Vec<u64> = idx.iter().enumerate().map(|(i, &k)| per_var[i][k]).collect();
            let mut val = fx.zero();
            for (m, c) in &terms {
                let s = m.iter().zip(&e).fold(0u64, |acc, (a, b)| (acc + (a % order) * b) % order);
                val = fx.add(&val, &fx.scale(&table[s as usize], c));
            }
            acc = fx.mul(&acc, &val);
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break 'outer;
                }
                idx[k] += 1;
                if idx[k] < per_var[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
        let (n, err_re) = fx.round(&acc.re);
        let err_im = fx.fraction(&acc.im);
        if err_re < 0.25 && err_im < 0.25 {
            return Ok(n);
        }
        if attempt == 2 {
            return Err(ResultantError::OracleImprecise { bits, residual: err_re.max(err_im) });
        }
        bits = bits.saturating_mul(2);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::resultant::{cyclic_resultant, FactorMask};

    #[test]
    fn oracle_matches_fast_path() {
        let f = parse_poly("3*t1^2*t2 - t1 + 2*t2 - 5", 2).unwrap();
        for levels in [vec![1u32, 1], vec![2, 1], vec![2, 2]] {
            for mask in [FactorMask::full(&levels), FactorMask::rprime(&levels)] {
                let r = CyclicRequest::new(f.clone(), 3, levels.clone(), mask).unwrap();
                assert_eq!(root_product_oracle(&r).unwrap(), cyclic_resultant(&r).unwrap());
            }
        }
    }
}
