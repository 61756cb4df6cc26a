//! Dual numbers `u + v*eps` with `eps^2 = 0`.
//!
//! Evaluating a polynomial at `x + eps` produces the value in the real part
//! and the exact derivative in the infinitesimal part, so one perturbed
//! evaluation per input coordinate yields a Jacobian column with no symbolic
//! expansion and no rounding.

use crate::rational::Rational;
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualNumber {
    pub value: Rational,
    pub infinitesimal: Rational,
}

impl DualNumber {
    pub fn new(value: Rational, infinitesimal: Rational) -> Self {
        DualNumber {
            value,
            infinitesimal,
        }
    }

    /// A constant: zero infinitesimal part.
    pub fn constant(value: Rational) -> Self {
        DualNumber::new(value, Scalar::zero())
    }

    /// `value + eps`, the seed for differentiating with respect to this input.
    pub fn variable(value: Rational) -> Self {
        DualNumber::new(value, Scalar::one())
    }
}

impl Scalar for DualNumber {
    fn zero() -> Self {
        DualNumber::constant(Scalar::zero())
    }

    fn one() -> Self {
        DualNumber::constant(Scalar::one())
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(&self.value) && Scalar::is_zero(&self.infinitesimal)
    }

    fn add(&self, other: &Self) -> Self {
        DualNumber::new(
            &self.value + &other.value,
            &self.infinitesimal + &other.infinitesimal,
        )
    }

    fn sub(&self, other: &Self) -> Self {
        DualNumber::new(
            &self.value - &other.value,
            &self.infinitesimal - &other.infinitesimal,
        )
    }

    fn mul(&self, other: &Self) -> Self {
        // (u + v eps)(p + q eps) = up + (uq + vp) eps
        DualNumber::new(
            &self.value * &other.value,
            &self.value * &other.infinitesimal + &self.infinitesimal * &other.value,
        )
    }

    fn neg(&self) -> Self {
        DualNumber::new(-&self.value, -&self.infinitesimal)
    }

    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(&self.value) {
            return None;
        }
        let vinv = Scalar::inv(&self.value)?;
        // (u + v eps)^{-1} = u^{-1} - v u^{-2} eps
        let d = -(&self.infinitesimal * &vinv * &vinv);
        Some(DualNumber::new(vinv, d))
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*eps", self.value, self.infinitesimal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn product_rule() {
        let a = DualNumber::new(rat_int(2), rat_int(3));
        let b = DualNumber::new(rat(1, 2), rat_int(-1));
        let p = a.mul(&b);
        assert_eq!(p.value, rat_int(1));
        assert_eq!(p.infinitesimal, rat(-1, 2)); // 2*(-1) + 3*(1/2)
    }

    #[test]
    fn inverse() {
        let a = DualNumber::new(rat_int(2), rat_int(5));
        let i = a.inv().unwrap();
        assert_eq!(a.mul(&i), Scalar::one());
        assert!(DualNumber::new(rat_int(0), rat_int(1)).inv().is_none());
    }
}
