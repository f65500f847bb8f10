//! Fixed-point complex arithmetic on big integers, used by the numerical
//! root-of-unity oracles. A value `x` is stored as `round(x * 2^bits)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

/// Arithmetic context with a fixed number of fractional bits.
#[derive(Clone, Copy, Debug)]
pub struct Fixed {
    pub bits: u32,
}

impl Fixed {
    pub fn new(bits: u32) -> Self {
        Fixed { bits }
    }

    pub fn zero(&self) -> Cx {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one(&self) -> Cx {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, c: &BigInt) -> Cx {
        Cx { re: c << self.bits, im: BigInt::zero() }
    }

    pub fn add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx { re: &a.re + &b.re, im: &a.im + &b.im }
    }

    pub fn sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx { re: &a.re - &b.re, im: &a.im - &b.im }
    }

    pub fn mul(&self, a: &Cx, b: &Cx) -> Cx {
        let re = (&a.re * &b.re - &a.im * &b.im) >> self.bits;
        let im = (&a.re * &b.im + &a.im * &b.re) >> self.bits;
        Cx { re, im }
    }

    /// Multiplies by an integer without rescaling.
    pub fn scale(&self, a: &Cx, k: &BigInt) -> Cx {
        Cx { re: &a.re * k, im: &a.im * k }
    }

    pub fn div(&self, a: &Cx, b: &Cx) -> Cx {
        let den = &b.re * &b.re + &b.im * &b.im;
        let re = ((&a.re * &b.re + &a.im * &b.im) << self.bits) / &den;
        let im = ((&a.im * &b.re - &a.re * &b.im) << self.bits) / &den;
        Cx { re, im }
    }

    pub fn pow(&self, z: &Cx, mut e: u64) -> Cx {
        let mut base = z.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Modulus, in the same fixed-point scale.
    pub fn abs(&self, z: &Cx) -> BigInt {
        (&z.re * &z.re + &z.im * &z.im).sqrt()
    }

    /// Re-expresses a value held at `from` fractional bits in this context.
    pub fn rescale(&self, z: &Cx, from: u32) -> Cx {
        if from >= self.bits {
            let s = from - self.bits;
            Cx { re: &z.re >> s, im: &z.im >> s }
        } else {
            let s = self.bits - from;
            Cx { re: &z.re << s, im: &z.im << s }
        }
    }

    /// `exp(2 pi i / order)` to the context precision.
    pub fn root_of_unity(&self, order: u64) -> Cx {
        assert!(order >= 1);
        match order {
            1 => return self.one(),
            2 => return self.from_int(&BigInt::from(-1)),
            4 => return Cx { re: BigInt::zero(), im: BigInt::one() << self.bits },
            _ => {}
        }
        let guard = 32;
        let work = Fixed::new(self.bits + guard);
        let theta = std::f64::consts::TAU / order as f64;
        let seed = |x: f64| -> BigInt {
            let m = (x * (1u64 << 52) as f64).round() as i64;
            BigInt::from(m) << (work.bits - 52)
        };
        let mut z = Cx { re: seed(theta.cos()), im: seed(theta.sin()) };
        let m = BigInt::from(order);
        let m1 = BigInt::from(order - 1);
        let tol = BigInt::one() << 8;
        for _ in 0..200 {
            // z <- ((M - 1) z^M + 1) / (M z^(M-1))
            let w = work.pow(&z, order - 1);
            let zm = work.mul(&w, &z);
            let num = work.add(&work.scale(&zm, &m1), &work.one());
            let den = work.scale(&w, &m);
            let next = work.div(&num, &den);
            let delta = (&next.re - &z.re).abs().max((&next.im - &z.im).abs());
            z = next;
            if delta <= tol {
                break;
            }
        }
        self.rescale(&z, work.bits)
    }

    /// All powers `zeta^0 .. zeta^(order-1)` of the primitive root.
    pub fn root_table(&self, order: u64) -> Vec<Cx> {
        let guard = 16 + 64 - order.leading_zeros();
        let work = Fixed::new(self.bits + guard);
        let z = work.root_of_unity(order);
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = work.one();
        for _ in 0..order {
            out.push(self.rescale(&cur, work.bits));
            cur = work.mul(&cur, &z);
        }
        out
    }

    /// Nearest integer to a real fixed-point value and the distance to it,
    /// the latter as an `f64` fraction of one unit.
    pub fn round(&self, x: &BigInt) -> (BigInt, f64) {
        let half = BigInt::one() << (self.bits - 1);
        let n = (x + &half) >> self.bits;
        let err = (x - (&n << self.bits)).abs();
        (n, self.fraction(&err))
    }

    /// `|x| / 2^bits` as a float, saturating for large values.
    pub fn fraction(&self, x: &BigInt) -> f64 {
        let shift = x.bits().saturating_sub(60);
        let top = (x.abs() >> shift).to_f64().unwrap_or(f64::MAX);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }
}
