//! Minimal field abstraction used by the polynomial and matrix code.
//!
//! Everything here is exact: the two instances are `BigRat` (elements
//! of Q) and `Frac<BigRat>` (elements of Q(t)), and the tower closes
//! under `Frac<F>` so that Q(t)(x)-style fraction fields come for free.

use crate::rat::BigRat;
use num_traits::{One, Signed, Zero};

/// An exact field. All operations are total except `inv` on zero.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; `None` exactly on zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRat::from_integer(v.into())
    }
}

/// True iff `q` is the square of a rational number.
pub fn rat_is_square(q: &BigRat) -> bool {
    if q.is_negative() {
        return false;
    }
    if Zero::is_zero(q) {
        return true;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    &(&sn * &sn) == n && &(&sd * &sd) == d
}

/// Exact rational square root, when one exists.
pub fn rat_sqrt(q: &BigRat) -> Option<BigRat> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        Some(BigRat::new(sn, sd))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn rational_squares() {
        assert!(rat_is_square(&r(9, 4)));
        assert!(rat_is_square(&r(0, 1)));
        assert!(!rat_is_square(&r(-9, 4)));
        assert!(!rat_is_square(&r(2, 1)));
        assert_eq!(rat_sqrt(&r(9, 4)), Some(r(3, 2)));
        assert_eq!(rat_sqrt(&r(2, 1)), None);
    }
}
