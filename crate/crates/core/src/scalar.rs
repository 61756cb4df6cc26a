//! Coefficient abstraction for polynomial arithmetic.
//!
//! The only implementors are exact rationals and dual numbers; both are
//! commutative rings with partial inversion, which is all the polynomial
//! code requires.

use std::fmt::Debug;

pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` when the element is not invertible.
    fn inv(&self) -> Option<Self>;
}
