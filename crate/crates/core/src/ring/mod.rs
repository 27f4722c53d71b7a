//! Exact coefficient arithmetic.
//!
//! Tensor entries live in any type implementing [`Scalar`]: polynomials in
//! `x1..x_{r-1}, t` for symbolic runs, big integers or rationals for exact
//! numeric specializations, and `Complex64` for the roots-of-unity check.

mod extract;
mod partition;
mod poly;

use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use extract::extract_partition_coefficients;
pub use partition::Partition;
pub use poly::{power_sum, power_sum_product, Monomial, MultiPoly};

/// A commutative ring element that can stand in a tensor entry.
///
/// The `*_like` constructors take a witness so that types carrying context
/// (a polynomial knows its variable count) can build matching constants.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn lift_bigint(&self, v: &BigInt) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Storage weight counted against the tensor size cap.
    fn cost(&self) -> u64 {
        1
    }

    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Scalar for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn lift_bigint(&self, v: &BigInt) -> Self {
        v.clone()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for BigRational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn lift_bigint(&self, v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for Complex64 {
    fn vanishes(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn lift_bigint(&self, v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
