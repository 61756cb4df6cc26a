//! Sparse multivariate polynomials over a named variable set.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order,
//! printing and equality are deterministic. The variable set is fixed per
//! context (a chart presentation, the pair {x, y}, ...) and shared by `Arc`.

use crate::error::{Error, Result};
use crate::rational::{rational_to_string, Rational};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<VarSet> {
        Arc::new(VarSet {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// The `{x, y}` variable set used for bivariate input polynomials.
pub fn xy_vars() -> Arc<VarSet> {
    VarSet::new(vec!["x", "y"])
}

/// A value a variable can be substituted with.
#[derive(Clone, Debug)]
pub enum Subst {
    Value(Rational),
    Poly(SparseMultiPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparseMultiPoly {
    pub fn zero(vars: Arc<VarSet>) -> Self {
        SparseMultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<VarSet>, c: Rational) -> Self {
        let mut p = SparseMultiPoly::zero(vars);
        p.add_term(vec![0; p.vars.len()], c);
        p
    }

    pub fn one(vars: Arc<VarSet>) -> Self {
        SparseMultiPoly::constant(vars, Scalar::one())
    }

    pub fn var(vars: Arc<VarSet>, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = SparseMultiPoly::zero(vars);
        p.add_term(exps, Scalar::one());
        Ok(p)
    }

    pub fn monomial(vars: Arc<VarSet>, exps: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = SparseMultiPoly::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        if Scalar::is_zero(&coeff) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if Scalar::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "incompatible variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparseMultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = SparseMultiPoly::zero(Arc::clone(&self.vars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Scalar::is_zero(c) {
            return SparseMultiPoly::zero(Arc::clone(&self.vars));
        }
        SparseMultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SparseMultiPoly::one(Arc::clone(&self.vars));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn partial_derivative(&self, name: &str) -> Result<Self> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        let mut out = SparseMultiPoly::zero(Arc::clone(&self.vars));
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[idx] -= 1;
            out.add_term(exps, c * Rational::from_integer(e[idx].into()));
        }
        Ok(out)
    }

    /// Substitutes rationals or polynomials for a subset of the variables.
    /// The result stays over the same variable set.
    pub fn substitute(&self, map: &BTreeMap<String, Subst>) -> Result<Self> {
        let mut indexed: Vec<(usize, &Subst)> = Vec::with_capacity(map.len());
        for (name, v) in map {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if let Subst::Poly(p) = v {
                self.check_vars(p);
            }
            indexed.push((idx, v));
        }
        let mut out = SparseMultiPoly::zero(Arc::clone(&self.vars));
        for (e, c) in &self.terms {
            let mut kept = e.clone();
            let mut factor = SparseMultiPoly::constant(Arc::clone(&self.vars), c.clone());
            for (idx, v) in &indexed {
                let exp = e[*idx];
                if exp == 0 {
                    continue;
                }
                kept[*idx] = 0;
                match v {
                    Subst::Value(r) => {
                        let mut power = Scalar::one();
                        for _ in 0..exp {
                            power = &power * r;
                        }
                        factor = factor.scale(&power);
                    }
                    Subst::Poly(p) => factor = factor.mul(&p.pow(exp)),
                }
            }
            let kept_mono = SparseMultiPoly::monomial(Arc::clone(&self.vars), kept, Scalar::one());
            out = out.add(&factor.mul(&kept_mono));
        }
        Ok(out)
    }

    /// Full evaluation; every variable appearing in a term must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values: Vec<Option<&Rational>> = self
            .vars
            .names()
            .iter()
            .map(|n| assignment.get(n))
            .collect();
        let mut acc: Rational = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let v = values[i]
                    .ok_or_else(|| Error::IncompleteAssignment(self.vars.names()[i].clone()))?;
                for _ in 0..exp {
                    term = &term * v;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, name: &str) -> Result<Option<u32>> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.terms.keys().map(|e| e[idx]).max())
    }
}

impl fmt::Display for SparseMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
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
            let is_const_term = e.iter().all(|&x| x == 0);
            let show_coeff = abs != Scalar::one() || is_const_term;
            if show_coeff {
                write!(f, "{}", rational_to_string(&abs))?;
            }
            let mut first_var = !show_coeff;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.vars.names()[i])?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn abc() -> Arc<VarSet> {
        VarSet::new(vec!["a", "b", "c"])
    }

    #[test]
    fn substitute_to_zero() {
        // a*b + c*b2 style: with b -> 0 everything with b dies
        let vs = VarSet::new(vec!["a1", "b2", "b3", "c1"]);
        let p = SparseMultiPoly::var(Arc::clone(&vs), "a1")
            .unwrap()
            .mul(&SparseMultiPoly::var(Arc::clone(&vs), "b2").unwrap())
            .add(
                &SparseMultiPoly::var(Arc::clone(&vs), "c1")
                    .unwrap()
                    .mul(&SparseMultiPoly::var(Arc::clone(&vs), "b3").unwrap()),
            );
        let mut map = BTreeMap::new();
        map.insert("b2".to_string(), Subst::Value(rat_int(0)));
        map.insert("b3".to_string(), Subst::Value(rat_int(0)));
        assert!(p.substitute(&map).unwrap().is_zero());
    }

    #[test]
    fn partial_derivative_example() {
        // d/da (a^2 + b^2 c) = 2a
        let vs = abc();
        let a = SparseMultiPoly::var(Arc::clone(&vs), "a").unwrap();
        let b = SparseMultiPoly::var(Arc::clone(&vs), "b").unwrap();
        let c = SparseMultiPoly::var(Arc::clone(&vs), "c").unwrap();
        let p = a.pow(2).add(&b.pow(2).mul(&c));
        assert_eq!(p.partial_derivative("a").unwrap(), a.scale(&rat_int(2)));
        assert!(p.partial_derivative("z").is_err());
    }

    #[test]
    fn unknown_substitution_errors() {
        let vs = abc();
        let p = SparseMultiPoly::var(vs, "a").unwrap();
        let mut map = BTreeMap::new();
        map.insert("q".to_string(), Subst::Value(rat_int(1)));
        assert_eq!(p.substitute(&map), Err(Error::UnknownVariable("q".into())));
    }

    #[test]
    fn display_is_deterministic() {
        let vs = abc();
        let a = SparseMultiPoly::var(Arc::clone(&vs), "a").unwrap();
        let b = SparseMultiPoly::var(Arc::clone(&vs), "b").unwrap();
        let p = a.mul(&b).scale(&rat_int(-3)).add(&SparseMultiPoly::one(vs));
        assert_eq!(p.to_string(), "1 - 3*a*b");
    }
}
