//! Dense univariate polynomials with exact coefficients.
//!
//! The coefficient vector is kept canonical: no trailing zeros, the zero
//! polynomial is the empty vector, and `degree()` returns `None` for it
//! rather than overloading `-1`.

use crate::dual::DualNumber;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<C: Scalar = Rational> {
    coeffs: Vec<C>,
}

impl<C: Scalar> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![C::zero(), C::one()])
    }

    /// `c * x^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients indexed by degree, canonicalizing.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` marks the zero polynomial (degree "minus infinity").
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| *c == C::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = C::one();
        for c in &self.coeffs[1..] {
            out.push(c.mul(&k));
            k = k.add(&C::one());
        }
        UniPoly::from_coeffs(out)
    }

    /// Long division: `self = q*g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let lc_inv = g
            .leading_coeff()
            .and_then(|c| c.inv())
            .ok_or(Error::NonInvertibleLeadingCoeff)?;
        let dg = g.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < g.coeffs.len() {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dg];
        while rem.len() >= g.coeffs.len() {
            let k = rem.len() - 1 - dg;
            let factor = rem.last().unwrap().mul(&lc_inv);
            if !factor.is_zero() {
                for (i, gc) in g.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&factor.mul(gc));
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < g.coeffs.len() {
                break;
            }
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Remainder modulo a monic polynomial of degree at least one.
    pub fn rem_monic(&self, a: &Self) -> Result<Self> {
        if !a.is_monic() || a.degree() == Some(0) || a.is_zero() {
            return Err(Error::BadModulus);
        }
        Ok(self.divrem(a)?.1)
    }

    /// `self^e mod a` by square-and-multiply, reducing after every step.
    pub fn powmod(&self, e: u64, a: &Self) -> Result<Self> {
        if !a.is_monic() || a.degree().is_none_or(|d| d == 0) {
            return Err(Error::BadModulus);
        }
        let mut base = self.divrem(a)?.1;
        let mut acc = UniPoly::one().divrem(a)?.1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(a)?.1;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).divrem(a)?.1;
            }
        }
        Ok(acc)
    }

    /// Maps coefficients into another scalar type.
    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rational> {
    /// Lifts to dual-number coefficients (all constants).
    pub fn to_dual(&self) -> UniPoly<DualNumber> {
        self.map(|c| DualNumber::constant(c.clone()))
    }

    /// Evaluates at a dual number; the infinitesimal part of the result is
    /// the derivative at the value part of the argument.
    pub fn eval_dual(&self, at: &DualNumber) -> DualNumber {
        self.to_dual().eval(at)
    }

    /// Rescales to leading coefficient one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd_monic(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).unwrap().1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).unwrap().1.is_zero()
    }

    /// `prod (x - root)^mult` over the given factors.
    pub fn from_roots(roots: &[(Rational, usize)]) -> Self {
        let mut acc = UniPoly::one();
        for (root, mult) in roots {
            let lin = UniPoly::from_coeffs(vec![-root.clone(), Scalar::one()]);
            acc = acc.mul(&lin.pow(*mult));
        }
        acc
    }

    /// Squarefree decomposition by Yun's gcd chain (characteristic zero):
    /// returns `(g_d, d)` pairs with each `g_d` monic, squarefree and pairwise
    /// coprime, `d` strictly increasing, and
    /// `self = lc * prod g_d^d`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let fp = f.derivative();
        let mut out = Vec::new();
        let d1 = f.gcd_monic(&fp);
        let mut b = f.divrem(&d1).unwrap().0;
        let mut c = fp.divrem(&d1).unwrap().0;
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            let a = b.gcd_monic(&d);
            if a.degree().is_some_and(|deg| deg >= 1) {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).unwrap().0;
            if b.degree() == Some(0) {
                break;
            }
            c = d.divrem(&a).unwrap().0;
            i += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for UniPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Scalar::is_zero(c) {
                continue;
            }
            let neg = c < &Rational::from_integer(0.into());
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = abs != Scalar::one() || i == 0;
            if show_coeff {
                write!(f, "{}", crate::rational::rational_to_string(&abs))?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn canonical_form() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(poly(&[]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn divrem_monomial() {
        // (x^3 + 1) / x^2 = (x, 1)
        let (q, r) = poly(&[1, 0, 0, 1]).divrem(&poly(&[0, 0, 1])).unwrap();
        assert_eq!(q, poly(&[0, 1]));
        assert_eq!(r, poly(&[1]));
    }

    #[test]
    fn divrem_self() {
        // (x^2 - 2x + 1) / (x^2 - 2x + 1) = (1, 0)
        let a = poly(&[1, -2, 1]);
        let (q, r) = a.divrem(&a).unwrap();
        assert_eq!(q, UniPoly::one());
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_exact_factor() {
        // (x^3 - 3x + 2) / (x - 1) = (x^2 + x - 2, 0); oracle: expand the product
        let f = poly(&[2, -3, 0, 1]);
        let g = poly(&[-1, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, poly(&[-2, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(q.mul(&g), f);
    }

    #[test]
    fn divrem_by_zero_errors() {
        assert_eq!(
            poly(&[1]).divrem(&UniPoly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn divrem_rejects_non_invertible_dual_leading_coeff() {
        let f = poly(&[1, 1]).to_dual();
        let g = UniPoly::from_coeffs(vec![DualNumber::new(rat_int(0), rat_int(1))]);
        assert_eq!(f.divrem(&g), Err(Error::NonInvertibleLeadingCoeff));
    }

    #[test]
    fn powmod_examples() {
        // x^2 mod x^2 = 0
        assert!(UniPoly::x().powmod(2, &poly(&[0, 0, 1])).unwrap().is_zero());
        // (x-1)^2 mod (x^2 - 2x + 1) = 0
        assert!(poly(&[-1, 1])
            .powmod(2, &poly(&[1, -2, 1]))
            .unwrap()
            .is_zero());
        // x^3 mod (x^2 - 3x + 1) = 8x - 3
        let r = UniPoly::x().powmod(3, &poly(&[1, -3, 1])).unwrap();
        assert_eq!(r, poly(&[-3, 8]));
    }

    #[test]
    fn powmod_rejects_bad_modulus() {
        assert_eq!(
            UniPoly::x().powmod(2, &poly(&[0, 2])),
            Err(Error::BadModulus)
        );
        assert_eq!(UniPoly::x().powmod(2, &poly(&[1])), Err(Error::BadModulus));
    }

    #[test]
    fn squarefree_examples() {
        // x^3 - 3x + 2 = (x - 1)^2 (x + 2)
        let f = poly(&[2, -3, 0, 1]);
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts, vec![(poly(&[2, 1]), 1), (poly(&[-1, 1]), 2)]);
        // x^n pure power
        let parts = poly(&[0, 0, 0, 0, 1]).squarefree_decomposition().unwrap();
        assert_eq!(parts, vec![(UniPoly::x(), 4)]);
        // squarefree cubic stays whole
        let f = poly(&[0, -1, 0, 1]);
        assert_eq!(f.squarefree_decomposition().unwrap(), vec![(f.clone(), 1)]);
        assert_eq!(
            UniPoly::zero().squarefree_decomposition(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn dual_evaluation_differentiates() {
        let f = poly(&[2, -3, 0, 1]); // f' = 3x^2 - 3
        let at = DualNumber::variable(rat_int(2));
        let out = f.eval_dual(&at);
        assert_eq!(out.value, rat_int(4));
        assert_eq!(out.infinitesimal, rat_int(9));
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[2, -3, 0, 1]).to_string(), "x^3 - 3*x + 2");
        assert_eq!(UniPoly::from_coeffs(vec![rat(1, 2)]).to_string(), "1/2");
        assert_eq!(UniPoly::<Rational>::zero().to_string(), "0");
    }
}
