use num_bigint::BigInt;
use num_integer::Integer;

use super::{LimitsError, MaskKind};
use crate::arith::big_pow;
use crate::poly::MultiPoly;
use crate::resultant::{cyclic_resultant_with, Budget};

/// Outcome of [`order_invariance_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub permutations_checked: usize,
    pub staircase_points: usize,
    pub permutation_ok: bool,
    pub staircase_ok: bool,
    /// First disagreement found, if any.
    pub counterexample: Option<String>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.permutation_ok && self.staircase_ok
    }
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    heap_permute(d, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// Checks that `r` is unchanged when variables and levels are permuted
/// together, and that every staircase path from `levels` to `levels + 1`
/// (raising one index at a time, in every order) stays congruent to the
/// starting value modulo `p^min(levels)`.
pub fn order_invariance_check(
    f: &MultiPoly,
    p: u64,
    levels: &[u32],
    kind: MaskKind,
    budget: &Budget,
) -> Result<InvarianceReport, LimitsError> {
    let d = f.nvars();
    if levels.len() != d {
        return Err(LimitsError::InvalidInput(format!("{} levels for {d} variables", levels.len())));
    }
    let mut report = InvarianceReport {
        permutations_checked: 0,
        staircase_points: 0,
        permutation_ok: true,
        staircase_ok: true,
        counterexample: None,
    };
    if d < 2 {
        return Ok(report);
    }
    let eval = |g: &MultiPoly, lv: &[u32]| -> Result<BigInt, LimitsError> {
        let req = kind.request(g, p, lv.to_vec())?;
        Ok(cyclic_resultant_with(&req, budget)?)
    };
    let base = eval(f, levels)?;
    for perm in permutations(d).into_iter().skip(1) {
        let g = f.permute_vars(&perm);
        let lv: Vec<u32> = perm.iter().map(|&j| levels[j]).collect();
        let r = eval(&g, &lv)?;
        report.permutations_checked += 1;
        if r != base {
            report.permutation_ok = false;
            report.counterexample.get_or_insert(format!("permutation {perm:?}: {r} != {base}"));
        }
    }
    let modulus = big_pow(p, *levels.iter().min().unwrap());
    let target = base.mod_floor(&modulus);
    let mut seen = std::collections::BTreeMap::new();
    for order in permutations(d) {
        let mut lv = levels.to_vec();
        for &i in &order {
            lv[i] += 1;
            let r = match seen.get(&lv) {
                Some(r) => BigInt::clone(r),
                None => {
                    let r = eval(f, &lv)?;
                    seen.insert(lv.clone(), r.clone());
                    report.staircase_points += 1;
                    r
                }
            };
            if r.mod_floor(&modulus) != target {
                report.staircase_ok = false;
                report.counterexample.get_or_insert(format!("levels {lv:?}: {r} differs from {base} mod {modulus}"));
            }
        }
    }
    Ok(report)
}
