use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Commutative ring operations used by the generic determinant and resultant code.
///
/// Elements carry enough context (number of variables, cyclotomic level) to
/// build their own zero and one.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

/// Exact division in an integral domain.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn ring_zero(&self) -> Self {
        BigInt::zero()
    }
    fn ring_one(&self) -> Self {
        BigInt::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}
