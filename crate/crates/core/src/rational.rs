//! Exact rational coefficients.
//!
//! All arithmetic in this crate happens over the rationals; nothing is ever
//! rounded. `BigRational` keeps values in lowest terms with a positive
//! denominator, which is exactly the canonical form we need.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p` or `p/q`, matching the accepted input syntax.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if <Rational as Zero>::is_zero(self) {
            None
        } else {
            Some(<Rational as One>::one() / self)
        }
    }
}

/// Clears denominators of a slice, returning integer numerators after
/// multiplying through by the least common multiple of the denominators.
pub fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in row {
        lcm = num_integer::lcm(lcm, r.denom().abs());
    }
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}
