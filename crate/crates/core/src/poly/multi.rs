use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{ExactDiv, Ring};
use super::uni::UniPoly;

/// Exponent vector ordered graded-lexicographically (`t1` most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.0.iter().zip(&rhs.0).all(|(a, b)| a <= b)
    }

    /// `rhs / self`; only valid when `self.divides(rhs)`.
    pub fn quotient_of(&self, rhs: &Monomial) -> Monomial {
        Monomial(rhs.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `t1..td` with integer coefficients.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `t_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), BigInt::one());
        p
    }

    /// Builds from `(coefficient, exponents)` pairs; like terms are combined.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Vec<u32>)>,
    {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn from_i64_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(c, e)| (BigInt::from(*c), e.to_vec())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
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

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong arity");
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Value at `(1, ..., 1)`: the sum of the coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `(-1, ..., -1)`.
    pub fn eval_minus_ones(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| if m.total_degree() % 2 == 1 { -c } else { c.clone() })
            .sum()
    }

    /// Reorders variables: variable `i` of the result is variable `perm[i]` of `self`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = perm.iter().map(|&j| m.0[j]).collect();
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Views the polynomial as univariate in variable `i` with coefficients in
    /// the remaining ring (variable `i` set to exponent zero).
    pub fn to_univariate(&self, i: usize) -> UniPoly<MultiPoly> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut coeffs = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.clone();
            e.0[i] = 0;
            coeffs[k].add_term(e, c.clone());
        }
        UniPoly::from_coeffs(coeffs, Self::zero(self.nvars))
    }

    /// Single-variable view as an integer polynomial; `None` if another variable occurs.
    pub fn to_int_univariate(&self, i: usize) -> Option<UniPoly<BigInt>> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e != 0) {
                return None;
            }
            coeffs[m.0[i] as usize] += c;
        }
        Some(UniPoly::from_big(coeffs))
    }

    pub fn from_int_univariate(f: &UniPoly<BigInt>) -> Self {
        let mut out = Self::zero(1);
        for (k, c) in f.coeffs().iter().enumerate() {
            out.add_term(Monomial(vec![k as u32]), c.clone());
        }
        out
    }

    /// Canonical text: graded-lex descending, `c*t1^a*t2^b` joined by ` + ` / ` - `.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Ring for MultiPoly {
    fn ring_zero(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn ring_one(&self) -> Self {
        Self::one(self.nvars)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (lm, lc) = rhs.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let (q, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = lm.quotient_of(m);
            let mut term = Self::zero(self.nvars);
            term.add_term(qm, q);
            rem = rem.sub(&term.mul(rhs));
            quot = quot.add(&term);
        }
        Some(quot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_i64_terms(nvars, terms)
    }

    #[test]
    fn canonical_order_is_graded_lex_descending() {
        let f = p(2, &[(-2, &[0, 0]), (1, &[1, 1]), (3, &[0, 1]), (-1, &[1, 0])]);
        assert_eq!(f.to_string(), "t1*t2 - t1 + 3*t2 - 2");
        let g = p(2, &[(-1, &[2, 0]), (5, &[0, 2])]);
        assert_eq!(g.to_string(), "-t1^2 + 5*t2^2");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn exact_division_round_trip() {
        let a = p(2, &[(1, &[1, 0]), (-1, &[0, 1]), (2, &[0, 0])]);
        let b = p(2, &[(3, &[1, 1]), (1, &[0, 0])]);
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&a), Some(b));
        let c = a.add(&MultiPoly::one(2));
        assert_eq!(ab.div_exact(&c), None);
    }

    #[test]
    fn evaluation_at_signs() {
        let f = p(2, &[(1, &[1, 1]), (-2, &[1, 0]), (4, &[0, 0])]);
        assert_eq!(f.eval_ones(), BigInt::from(3));
        assert_eq!(f.eval_minus_ones(), BigInt::from(7));
        let pt = [BigInt::from(2), BigInt::from(5)];
        assert_eq!(f.eval(&pt), BigInt::from(10));
    }
}
