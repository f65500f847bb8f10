use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::cyclo::CycloInt;
use super::prs::resultant_reduced;
use super::sylvester::{sylvester_dimension, sylvester_resultant};
use super::{Budget, ResultantError};
use crate::arith::is_prime;
use crate::poly::{cyclotomic, cyclotomic_product, MultiPoly, UniPoly};

/// Which cyclotomic factors `Phi_{p^j}(t_i)` enter the resultant, per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorMask(Vec<Vec<u32>>);

impl FactorMask {
    /// All `j in 0..=n_i`: the divisor is `t_i^(p^n_i) - 1`.
    pub fn full(levels: &[u32]) -> Self {
        FactorMask(levels.iter().map(|&n| (0..=n).collect()).collect())
    }

    /// `j in 1..=n_i`: the divisor is `(t_i^(p^n_i) - 1) / (t_i - 1)`.
    pub fn rprime(levels: &[u32]) -> Self {
        FactorMask(levels.iter().map(|&n| (1..=n).collect()).collect())
    }

    /// Arbitrary per-variable index sets; duplicates are removed.
    pub fn custom(mut sets: Vec<Vec<u32>>) -> Self {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        FactorMask(sets)
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.0
    }

    /// Every index tuple `(j_1, ..., j_d)` in the mask, lexicographically.
    pub fn tuples(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for set in &self.0 {
            let mut next = Vec::with_capacity(out.len() * set.len());
            for prefix in &out {
                for &j in set {
                    let mut t = prefix.clone();
                    t.push(j);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
}

/// A request for an iterated cyclic resultant
/// `Res(D_1(t_1), ... Res(D_d(t_d), f))`, with `D_i` the product of the
/// masked cyclotomic factors of `t_i^(p^n_i) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicRequest {
    pub f: MultiPoly,
    pub p: u64,
    pub levels: Vec<u32>,
    pub mask: FactorMask,
}

impl CyclicRequest {
    pub fn new(f: MultiPoly, p: u64, levels: Vec<u32>, mask: FactorMask) -> Result<Self, ResultantError> {
        if !is_prime(p) {
            return Err(ResultantError::NotPrime(p));
        }
        if levels.len() != f.nvars() || mask.sets().len() != f.nvars() {
            return Err(ResultantError::ArityMismatch { nvars: f.nvars(), levels: levels.len() });
        }
        if levels.contains(&0) {
            return Err(ResultantError::InvalidLevels(levels));
        }
        for (i, (set, &n)) in mask.sets().iter().zip(&levels).enumerate() {
            if let Some(&j) = set.iter().find(|&&j| j > n) {
                return Err(ResultantError::MaskOutOfRange { variable: i + 1, index: j, level: n });
            }
        }
        Ok(CyclicRequest { f, p, levels, mask })
    }

    pub fn full(f: MultiPoly, p: u64, levels: Vec<u32>) -> Result<Self, ResultantError> {
        let mask = FactorMask::full(&levels);
        Self::new(f, p, levels, mask)
    }

    pub fn rprime(f: MultiPoly, p: u64, levels: Vec<u32>) -> Result<Self, ResultantError> {
        let mask = FactorMask::rprime(&levels);
        Self::new(f, p, levels, mask)
    }

    fn check_budget(&self, budget: &Budget) -> Result<(), ResultantError> {
        let mut points: u64 = 1;
        for &n in &self.levels {
            let deg = self.p.checked_pow(n).unwrap_or(u64::MAX);
            if deg > budget.max_degree {
                return Err(ResultantError::BudgetExceeded { needed: deg, budget: budget.max_degree, what: "cyclotomic degree" });
            }
            points = points.saturating_mul(deg);
        }
        if points > budget.max_points {
            return Err(ResultantError::BudgetExceeded { needed: points, budget: budget.max_points, what: "root-of-unity tuples" });
        }
        Ok(())
    }
}

/// Fast path with the default budget.
pub fn cyclic_resultant(req: &CyclicRequest) -> Result<BigInt, ResultantError> {
    cyclic_resultant_with(req, &Budget::default())
}

/// Product over masked index tuples of [`cyclotomic_factor`].
pub fn cyclic_resultant_with(req: &CyclicRequest, budget: &Budget) -> Result<BigInt, ResultantError> {
    let factors = cyclic_factors_with(req, budget)?;
    let mut acc = BigInt::one();
    for (_, v) in factors {
        if v.is_zero() {
            return Ok(BigInt::zero());
        }
        acc *= v;
    }
    Ok(acc)
}

/// The individual factors, keyed by index tuple, in lexicographic order.
pub fn cyclic_factors_with(req: &CyclicRequest, budget: &Budget) -> Result<Vec<(Vec<u32>, BigInt)>, ResultantError> {
    req.check_budget(budget)?;
    let tuples = req.mask.tuples();
    let vals: Vec<BigInt> = tuples.par_iter().map(|js| cyclotomic_factor(&req.f, req.p, js)).collect();
    Ok(tuples.into_iter().zip(vals).collect())
}

/// `prod f(zeta_1, ..., zeta_d)` over `zeta_i` primitive of order `p^{j_i}`.
///
/// Equivalent to the iterated resultant against `Phi_{p^{j_i}}(t_i)`. One
/// variable of maximal order is pinned to a fixed primitive root; the rest are
/// enumerated, and the Galois orbit is collapsed with a field norm.
pub fn cyclotomic_factor(f: &MultiPoly, p: u64, js: &[u32]) -> BigInt {
    assert_eq!(js.len(), f.nvars());
    if f.is_zero() {
        return BigInt::zero();
    }
    let top = js.iter().copied().max().unwrap_or(0);
    if top == 0 {
        return f.eval_ones();
    }
    if f.nvars() == 1 {
        let g = f.to_int_univariate(0).expect("univariate");
        let phi = cyclotomic(p, top).expect("prime checked by caller");
        // Res(Phi, g) = (-1)^(deg Phi deg g) Res(g, Phi)
        let r = resultant_reduced(&g, &phi);
        let odd = (phi.degree().unwrap() * g.degree().unwrap_or(0)) % 2 == 1;
        return if odd { -r } else { r };
    }
    let order = p.pow(top);
    let anchor = js.iter().position(|&j| j == top).unwrap();
    // Exponent choices for each variable, as multiples modulo p^top.
    let choices: Vec<Vec<u64>> = js
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            if i == anchor {
                vec![1]
            } else if j == 0 {
                vec![0]
            } else {
                let step = p.pow(top - j);
                (1..p.pow(j)).filter(|u| u % p != 0).map(|u| u * step).collect()
            }
        })
        .collect();
    let terms: Vec<(Vec<u64>, &BigInt)> = f
        .terms()
        .map(|(m, c)| (m.0.iter().map(|&e| e as u64 % order).collect(), c))
        .collect();
    let mut acc = CycloInt::one(p, top);
    let mut idx = vec![0usize; js.len()];
    loop {
        let e: Vec<u64> = idx.iter().enumerate().map(|(i, &k)| choices[i][k]).collect();
        let elem = CycloInt::from_exponents(
            p,
            top,
            terms.iter().map(|(m, c)| {
                let s = m.iter().zip(&e).fold(0u64, |acc, (a, b)| (acc + a * b) % order);
                (s, *c)
            }),
        );
        if elem.is_zero() {
            return BigInt::zero();
        }
        acc = acc.mul(&elem);
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == idx.len() {
                return acc.norm();
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Literal iterated resultant: Sylvester matrices over `Z[t_1..t_{i-1}]`,
/// eliminating `t_d` first. `max_dimension` bounds every Sylvester matrix.
pub fn cyclic_resultant_baseline(req: &CyclicRequest, max_dimension: usize) -> Result<BigInt, ResultantError> {
    let d = req.f.nvars();
    let mut cur = req.f.clone();
    for i in (0..d).rev() {
        let div = cyclotomic_product(req.p, &req.mask.sets()[i]).map_err(|_| ResultantError::NotPrime(req.p))?;
        let div = UniPoly::from_coeffs(
            div.coeffs().iter().map(|c| MultiPoly::constant(d, c.clone())).collect(),
            MultiPoly::zero(d),
        );
        let g = cur.to_univariate(i);
        let dim = sylvester_dimension(&div, &g);
        if dim > max_dimension {
            return Err(ResultantError::BudgetExceeded { needed: dim as u64, budget: max_dimension as u64, what: "Sylvester dimension" });
        }
        cur = sylvester_resultant(&div, &g);
        if cur.is_zero() {
            return Ok(BigInt::zero());
        }
    }
    Ok(cur.as_constant().expect("all variables eliminated"))
}
