//! The one-row chart: ideals `I = (a(x), y - b(x))` with `a` monic of degree
//! `n` and `deg b < n`, for which `1, x, ..., x^{n-1}` is automatically a
//! basis of the quotient.
//!
//! Membership of `y^beta` reduces to divisibility `a | b^beta`; an
//! independent check goes through the companion matrix of `a`, testing that
//! `b(X)^beta` is the zero matrix. The multiplicity profile of the
//! Hilbert-Chow image comes from the squarefree decomposition of `a`, so no
//! roots are ever located.

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::multipoly::SparseMultiPoly;
use crate::partitions::Partition;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartIdealN {
    n: usize,
    a: UniPoly,
    b: UniPoly,
}

/// Point multiplicities of the Hilbert-Chow image, sorted descending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicityProfile(pub Partition);

impl MultiplicityProfile {
    pub fn mults(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn total(&self) -> usize {
        self.0.size()
    }

    /// Number of distinct points.
    pub fn points(&self) -> usize {
        self.0.rows()
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl ChartIdealN {
    /// `a` must be monic of degree at least one; `b` is reduced mod `a`, so
    /// any representative of the same ideal constructs the same value.
    pub fn new(a: UniPoly, b: UniPoly) -> Result<Self> {
        if !a.is_monic() || a.degree().is_none_or(|d| d == 0) {
            return Err(Error::NotMonic);
        }
        let n = a.degree().unwrap();
        let b = b.divrem(&a)?.1;
        Ok(ChartIdealN { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &UniPoly {
        &self.a
    }

    pub fn b(&self) -> &UniPoly {
        &self.b
    }

    /// Coefficients of `x^r b(x)^s mod a(x)` in the basis `1, x, ..., x^{n-1}`.
    pub fn normal_form(&self, r: usize, s: usize) -> Vec<Rational> {
        let bs = self.b.powmod(s as u64, &self.a).unwrap();
        let reduced = bs.shift(r).divrem(&self.a).unwrap().1;
        (0..self.n).map(|i| reduced.coeff(i)).collect()
    }

    /// True when `y^beta` lies in the ideal, i.e. `a | b^beta`.
    pub fn contains_power_y(&self, beta: usize) -> bool {
        self.b.powmod(beta as u64, &self.a).unwrap().is_zero()
    }

    /// Membership of an arbitrary bivariate polynomial: substitute
    /// `y -> b(x)` and reduce mod `a(x)`.
    pub fn contains_poly(&self, f: &SparseMultiPoly) -> Result<bool> {
        let vars = f.vars();
        let xi = vars
            .index_of("x")
            .ok_or(Error::UnknownVariable("x".into()))?;
        let yi = vars
            .index_of("y")
            .ok_or(Error::UnknownVariable("y".into()))?;
        for (i, name) in vars.names().iter().enumerate() {
            if i != xi && i != yi {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let mut acc = UniPoly::zero();
        for (exps, coeff) in f.terms() {
            let (r, s) = (exps[xi] as usize, exps[yi] as u64);
            let term = self
                .b
                .powmod(s, &self.a)?
                .shift(r)
                .scale(coeff)
                .divrem(&self.a)?
                .1;
            acc = acc.add(&term);
        }
        Ok(acc.divrem(&self.a)?.1.is_zero())
    }

    /// Multiplicities of the roots of `a`, via squarefree decomposition: each
    /// squarefree factor of exponent `d` contributes `deg` points of
    /// multiplicity `d`.
    pub fn hilbert_chow_profile(&self) -> MultiplicityProfile {
        let mut mults = Vec::new();
        for (g, d) in self.a.squarefree_decomposition().unwrap() {
            let deg = g.degree().unwrap();
            mults.extend(std::iter::repeat_n(d, deg));
        }
        MultiplicityProfile(Partition::from_unsorted(mults))
    }

    /// Independent membership oracle: `X` the companion matrix of `a`,
    /// membership of `y^beta` means `b(X)^beta = 0`.
    pub fn oracle_nilpotency(&self, beta: usize) -> bool {
        let x = RationalMatrix::companion(&self.a).unwrap();
        let bx = RationalMatrix::eval_poly(&self.b, &x).unwrap();
        bx.pow(beta as u64).unwrap().is_zero()
    }

    /// The chart coordinates `(a_0..a_{n-1}, b_0..b_{n-1})` of this ideal,
    /// where `a(x) = x^n - a_{n-1} x^{n-1} - ... - a_0`.
    pub fn chart_coords(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = (0..self.n).map(|i| -self.a.coeff(i)).collect();
        out.extend((0..self.n).map(|i| self.b.coeff(i)));
        out
    }

    /// Rebuilds an ideal from chart coordinates.
    pub fn from_chart_coords(coords: &[Rational]) -> Result<Self> {
        if !coords.len().is_multiple_of(2) || coords.is_empty() {
            return Err(Error::DimensionMismatch);
        }
        let n = coords.len() / 2;
        let mut a_coeffs: Vec<Rational> = coords[..n].iter().map(|c| -c).collect();
        a_coeffs.push(Scalar::one());
        let a = UniPoly::from_coeffs(a_coeffs);
        let b = UniPoly::from_coeffs(coords[n..].to_vec());
        ChartIdealN::new(a, b)
    }
}

impl fmt::Display for ChartIdealN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(a = {}, b = {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::xy_vars;
    use crate::rational::rat_int;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn ideal(a: &[i64], b: &[i64]) -> ChartIdealN {
        ChartIdealN::new(poly(a), poly(b)).unwrap()
    }

    #[test]
    fn rejects_non_monic() {
        assert_eq!(
            ChartIdealN::new(poly(&[1, 2]).scale(&rat_int(2)), UniPoly::zero()),
            Err(Error::NotMonic)
        );
        assert_eq!(
            ChartIdealN::new(poly(&[5]), UniPoly::zero()),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn b_is_reduced_at_construction() {
        // b = x^2 reduces to 3x - 1 mod x^2 - 3x + 1
        let i = ideal(&[1, -3, 1], &[0, 0, 1]);
        assert_eq!(i.b(), &poly(&[-1, 3]));
    }

    #[test]
    fn normal_form_examples() {
        let i = ideal(&[1, -3, 1], &[]);
        assert_eq!(i.normal_form(3, 0), vec![rat_int(-3), rat_int(8)]);
        assert_eq!(i.normal_form(2, 0), vec![rat_int(-1), rat_int(3)]);
        assert_eq!(i.normal_form(0, 0), vec![rat_int(1), rat_int(0)]);
        // (r, 0) with r < n is the unit vector at r
        assert_eq!(i.normal_form(1, 0), vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn membership_examples() {
        assert!(ideal(&[0, 0, 1], &[0, 1]).contains_power_y(2));
        assert!(!ideal(&[0, 0, 1], &[1]).contains_power_y(2));
        assert!(ideal(&[1, -2, 1], &[-1, 1]).contains_power_y(2));
    }

    #[test]
    fn membership_of_general_polynomials() {
        let vars = xy_vars();
        let y = SparseMultiPoly::var(vars.clone(), "y").unwrap();
        let x = SparseMultiPoly::var(vars.clone(), "x").unwrap();
        let i = ideal(&[0, 0, 1], &[0, 1]);
        assert!(i.contains_poly(&y.pow(2)).unwrap());
        assert!(i.contains_poly(&y.sub(&x)).unwrap());
        assert!(!i.contains_poly(&y).unwrap());
        // b^2 = (x-1)^2 (x+2)^2 is divisible by a = (x-1)^2 (x+2)
        let i = ideal(&[2, -3, 0, 1], &[-2, 1, 1]);
        assert!(i.contains_poly(&y.pow(2)).unwrap());
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            ideal(&[2, -3, 0, 1], &[]).hilbert_chow_profile().mults(),
            &[2, 1]
        );
        assert_eq!(
            ideal(&[0, 0, 0, 1], &[]).hilbert_chow_profile().mults(),
            &[3]
        );
        assert_eq!(
            ideal(&[0, -1, 0, 1], &[]).hilbert_chow_profile().mults(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn oracle_examples() {
        assert!(ideal(&[0, 0, 1], &[0, 1]).oracle_nilpotency(2));
        assert!(ideal(&[1, -3, 1], &[]).oracle_nilpotency(1));
        assert!(ideal(&[1, -3, 1], &[]).oracle_nilpotency(3));
        assert!(!ideal(&[-1, 0, 1], &[0, 1]).oracle_nilpotency(3));
    }

    #[test]
    fn display_text_form() {
        let i = ideal(&[1, -2, 1], &[-1, 1]);
        assert_eq!(i.to_string(), "ideal(a = x^2 - 2*x + 1, b = x - 1)");
    }

    #[test]
    fn chart_coords_roundtrip() {
        let i = ideal(&[1, -3, 1], &[5, 7]);
        let coords = i.chart_coords();
        assert_eq!(
            coords,
            vec![rat_int(-1), rat_int(3), rat_int(5), rat_int(7)]
        );
        assert_eq!(ChartIdealN::from_chart_coords(&coords).unwrap(), i);
    }
}
