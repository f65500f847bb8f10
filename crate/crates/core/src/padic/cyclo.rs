use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::approx::PadicApprox;
use super::PadicError;
use crate::arith::{big_pow, ilog, is_prime, mod_inverse, phi_prime_power, split_p, vp_u64};
use crate::resultant::CycloInt;

/// Element of `Z_p[zeta_{p^m}]` known modulo `p^precision`, in the power basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPadic {
    p: u64,
    level: u32,
    precision: u32,
    coeffs: Vec<BigInt>,
}

impl CycloPadic {
    /// Reduces an arbitrary coefficient vector modulo `Phi_{p^m}` and `p^precision`.
    pub fn new(p: u64, level: u32, precision: u32, raw: Vec<BigInt>) -> Result<Self, PadicError> {
        if !is_prime(p) {
            return Err(PadicError::NotPrime(p));
        }
        if level == 0 || precision == 0 {
            return Err(PadicError::InvalidLevel(level));
        }
        Ok(Self::from_cyclo_int(&CycloInt::from_coeffs(p, level, raw), precision))
    }

    pub fn from_cyclo_int(x: &CycloInt, precision: u32) -> Self {
        let m = big_pow(x.p(), precision);
        CycloPadic {
            p: x.p(),
            level: x.level(),
            precision,
            coeffs: x.coeffs().iter().map(|c| c.mod_floor(&m)).collect(),
        }
    }

    pub fn from_int(p: u64, level: u32, precision: u32, c: &BigInt) -> Self {
        Self::from_cyclo_int(&CycloInt::from_int(p, level, c.clone()), precision)
    }

    pub fn one(p: u64, level: u32, precision: u32) -> Self {
        Self::from_int(p, level, precision, &BigInt::one())
    }

    /// `a + b zeta`.
    pub fn linear(p: u64, level: u32, precision: u32, a: i64, b: i64) -> Self {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        Self::from_cyclo_int(&CycloInt::from_exponents(p, level, [(0u64, &a), (1u64, &b)]), precision)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `phi(p^m)`, the value of `v_pi(p)`.
    pub fn ramification(&self) -> u64 {
        phi_prime_power(self.p, self.level)
    }

    pub fn to_cyclo_int(&self) -> CycloInt {
        CycloInt::from_coeffs(self.p, self.level, self.coeffs.clone())
    }

    /// Same coefficients viewed at a different precision (a lift when raising it).
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::from_cyclo_int(&self.to_cyclo_int(), precision)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, rhs: &Self) {
        assert_eq!((self.p, self.level, self.precision), (rhs.p, rhs.level, rhs.precision), "mismatched cyclotomic contexts");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::from_cyclo_int(&self.to_cyclo_int().add(&rhs.to_cyclo_int()), self.precision)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::from_cyclo_int(&self.to_cyclo_int().sub(&rhs.to_cyclo_int()), self.precision)
    }

    pub fn neg(&self) -> Self {
        Self::from_cyclo_int(&self.to_cyclo_int().neg(), self.precision)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::from_cyclo_int(&self.to_cyclo_int().mul(&rhs.to_cyclo_int()), self.precision)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let c = self.coeffs.iter().map(|a| a * k).collect();
        Self::from_cyclo_int(&CycloInt::from_coeffs(self.p, self.level, c), self.precision)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p, self.level, self.precision);
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

    /// Image in the residue field `F_p` (`zeta -> 1`).
    pub fn residue_mod_pi(&self) -> u64 {
        let s: BigInt = self.coeffs.iter().sum();
        let r = s.mod_floor(&BigInt::from(self.p));
        u64::try_from(r).expect("small residue")
    }

    /// Absolute norm of the stored representative; meaningful modulo `p^precision`.
    pub fn norm(&self) -> BigInt {
        self.to_cyclo_int().norm()
    }

    /// `v_pi(x)` in units where `v_pi(1 - zeta) = 1`, computed as `v_p(N(x))`
    /// on the stored representative.
    ///
    /// A representative that is nonzero modulo `p^precision` has `v_pi` below
    /// `precision * phi`, so the value is determined by the known digits; a
    /// zero representative carries no information and is an error.
    pub fn pi_valuation(&self) -> Result<u64, PadicError> {
        if self.is_zero() {
            return Err(PadicError::PrecisionExhausted);
        }
        let v = split_p(&self.norm(), self.p).0;
        debug_assert!(v < self.precision as u64 * self.ramification());
        Ok(v)
    }

    /// `v_pi(x) / phi(p^m)`, the valuation normalized so that `v(p) = 1`.
    pub fn valuation_q(&self) -> Result<Ratio<i64>, PadicError> {
        Ok(Ratio::new(self.pi_valuation()? as i64, self.ramification() as i64))
    }

    /// Inverse of a unit by Newton iteration `y <- y (2 - x y)`.
    pub fn invert_unit(&self) -> Result<Self, PadicError> {
        let r = self.residue_mod_pi();
        if r == 0 {
            return Err(PadicError::NotAUnit);
        }
        let m = big_pow(self.p, self.precision);
        let r0 = mod_inverse(&BigInt::from(r), &m).expect("unit mod p");
        let mut y = Self::from_int(self.p, self.level, self.precision, &r0);
        let one = Self::one(self.p, self.level, self.precision);
        let two = Self::from_int(self.p, self.level, self.precision, &BigInt::from(2));
        let target = self.precision as u64 * self.ramification();
        let max_iter = 2 * (64 - target.leading_zeros()) + 4;
        for _ in 0..max_iter {
            let xy = self.mul(&y);
            if xy == one {
                return Ok(y);
            }
            y = y.mul(&two.sub(&xy));
        }
        if self.mul(&y) == one {
            Ok(y)
        } else {
            Err(PadicError::PrecisionExhausted)
        }
    }

    /// Logarithm of `x` with `(p - 1) v_pi(x - 1) > phi(p^m)`, where the
    /// series converges with integral terms.
    pub fn cyclo_log(&self) -> Result<Self, PadicError> {
        let one = Self::one(self.p, self.level, self.precision);
        let y = self.sub(&one);
        if y.is_zero() {
            return Ok(Self::from_int(self.p, self.level, self.precision, &BigInt::zero()));
        }
        let w = y.pi_valuation()?;
        let phi = self.ramification();
        if (self.p - 1) * w <= phi {
            return Err(PadicError::OutsideConvergence);
        }
        let k = self.precision as u64;
        // Terms i with i w - phi v_p(i) >= k phi vanish mod p^k.
        let mut included = Vec::new();
        let mut i: u64 = 1;
        while i * w < k * phi + phi * (ilog(i, self.p) as u64 + 1) {
            if i * w < k * phi + phi * vp_u64(i, self.p) as u64 {
                included.push(i);
            }
            i += 1;
        }
        let extra = included.iter().map(|&i| vp_u64(i, self.p)).max().unwrap_or(0);
        let work = self.precision + extra;
        let yl = y.with_precision(work);
        let m = big_pow(self.p, self.precision);
        let mut acc = CycloInt::zero(self.p, self.level);
        let mut power = Self::one(self.p, self.level, work);
        let mut last = 0u64;
        for &i in &included {
            while last < i {
                power = power.mul(&yl);
                last += 1;
            }
            let e = vp_u64(i, self.p);
            let pe = big_pow(self.p, e);
            let inv = mod_inverse(&BigInt::from(i / self.p.pow(e)), &m).expect("unit");
            let c: Vec<BigInt> = power
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(&pe);
                    debug_assert!(r.is_zero(), "log term not integral");
                    let t = q * &inv;
                    if i % 2 == 1 {
                        t
                    } else {
                        -t
                    }
                })
                .collect();
            acc = acc.add(&CycloInt::from_coeffs(self.p, self.level, c));
        }
        Ok(Self::from_cyclo_int(&acc, self.precision))
    }

    /// `(a, log(x^(p^a)))` for the least `a` that brings `x^(p^a)` into the
    /// convergence region of [`CycloPadic::cyclo_log`]. `x` must be `1 mod pi`.
    pub fn cyclo_log_scaled(&self) -> Result<(u32, Self), PadicError> {
        if self.residue_mod_pi() != 1 {
            return Err(PadicError::NotPrincipalUnit);
        }
        let one = Self::one(self.p, self.level, self.precision);
        let phi = self.ramification();
        let mut z = self.clone();
        for a in 0..=(self.level + 2 * self.precision) {
            let y = z.sub(&one);
            if y.is_zero() {
                return Err(PadicError::PrecisionExhausted);
            }
            let w = y.pi_valuation()?;
            if (self.p - 1) * w > phi {
                return Ok((a, z.cyclo_log()?));
            }
            z = z.pow(self.p);
        }
        Err(PadicError::OutsideConvergence)
    }
}

/// Data attached to one primitive `2^level`-th root `zeta` for the unit
/// `x = (m zeta + m + 1) / (m zeta + m + zeta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuZeta {
    pub m: i64,
    pub level: u32,
    /// Least `a` with `log(x^(2^a))` given by a convergent integral series.
    pub scale: u32,
    /// `v_pi(log x)`, which may be negative.
    pub pi_valuation: i64,
    /// `v_2(log x)` normalized so that `v_2(2) = 1`.
    pub nu: Ratio<i64>,
    /// Sign-preserving non-2 part of the integer `N(log x)`, mod `2^K`.
    pub norm_nonp: PadicApprox,
}

impl NuZeta {
    /// Sum of `nu` over the Galois orbit of `zeta` (all conjugates share it).
    pub fn orbit_sum(&self) -> i64 {
        self.pi_valuation
    }

    /// The same sum if `nu` were measured in `pi`-units instead.
    pub fn orbit_sum_pi_units(&self) -> i64 {
        self.pi_valuation * phi_prime_power(2, self.level) as i64
    }
}

/// Valuation data of `log x_zeta` at `p = 2`, at `K` digits for the norm's non-2 part.
///
/// `m = 0` and `m = -1` make `x` a root of unity with vanishing logarithm and
/// are reported as degenerate.
pub fn nu_zeta(m: i64, level: u32, precision: u32) -> Result<NuZeta, PadicError> {
    if m == 0 || m == -1 {
        return Err(PadicError::Degenerate);
    }
    if level < 2 {
        return Err(PadicError::InvalidLevel(level));
    }
    let phi = phi_prime_power(2, level) as u32;
    let mut work = precision + 2 * phi + 8;
    for _ in 0..8 {
        match nu_zeta_at(m, level, precision, work) {
            Err(PadicError::PrecisionExhausted) => work *= 2,
            other => return other,
        }
    }
    Err(PadicError::PrecisionExhausted)
}

fn nu_zeta_at(m: i64, level: u32, precision: u32, work: u32) -> Result<NuZeta, PadicError> {
    let num = CycloPadic::linear(2, level, work, m + 1, m);
    let den = CycloPadic::linear(2, level, work, m, m + 1);
    let x = num.mul(&den.invert_unit()?);
    let (a, log_z) = x.cyclo_log_scaled()?;
    let n = log_z.norm();
    if n.is_zero() {
        return Err(PadicError::PrecisionExhausted);
    }
    let (v, u) = split_p(&n, 2);
    let phi = phi_prime_power(2, level) as i64;
    // N(y + 2^W e) / N(y) = 1 mod 2^(W - ceil(v_pi(y) / phi)).
    if precision as u64 + v.div_ceil(phi as u64) + 1 > work as u64 {
        return Err(PadicError::PrecisionExhausted);
    }
    let pv = v as i64 - a as i64 * phi;
    Ok(NuZeta {
        m,
        level,
        scale: a,
        pi_valuation: pv,
        nu: Ratio::new(pv, phi),
        norm_nonp: PadicApprox::from_integer(&u, 2, precision),
    })
}
