//! Exact matrices over the rationals.
//!
//! Rank goes through fraction-free (Bareiss) elimination on a
//! denominator-cleared integer copy, so every intermediate value is an exact
//! minor and the result is independent of row or column ordering.

use crate::error::{Error, Result};
use crate::rational::{clear_denominators, Rational};
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if Scalar::is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mat_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc: Rational, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut acc = RationalMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact rank via Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| clear_denominators(self.row(i)))
            .collect();
        let mut prev = BigInt::from(1);
        let mut r = 0usize;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(pivot) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pivot);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = num / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Solves the square system `self * x = rhs` exactly; `None` if singular.
    #[allow(clippy::needless_range_loop)] // elimination reads two rows at once
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut b = rhs.to_vec();
        for c in 0..n {
            let pivot = (c..n).find(|&i| !Scalar::is_zero(&a[i][c]))?;
            a.swap(c, pivot);
            b.swap(c, pivot);
            let inv = Scalar::inv(&a[c][c]).unwrap();
            for j in c..n {
                a[c][j] = &a[c][j] * &inv;
            }
            b[c] = &b[c] * &inv;
            for i in 0..n {
                if i == c || Scalar::is_zero(&a[i][c]) {
                    continue;
                }
                let f = a[i][c].clone();
                for j in c..n {
                    a[i][j] = &a[i][j] - &(&f * &a[c][j]);
                }
                b[i] = &b[i] - &(&f * &b[c]);
            }
        }
        Some(b)
    }

    /// Companion matrix of a monic polynomial: multiplication by `x` on the
    /// quotient ring basis `1, x, ..., x^{n-1}`.
    pub fn companion(a: &UniPoly) -> Result<Self> {
        if !a.is_monic() || a.degree().is_none_or(|d| d == 0) {
            return Err(Error::NotMonic);
        }
        let n = a.degree().unwrap();
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n - 1 {
            m.set(i + 1, i, Scalar::one());
        }
        for i in 0..n {
            m.set(i, n - 1, -a.coeff(i));
        }
        Ok(m)
    }

    /// Horner evaluation of a polynomial at a square matrix.
    pub fn eval_poly(b: &UniPoly, m: &Self) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::DimensionMismatch);
        }
        let n = m.rows;
        let mut acc = RationalMatrix::zeros(n, n);
        for c in b.coeffs().iter().rev() {
            acc = acc.mul(m)?;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", crate::rational::rational_to_string(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zeros(2, 4).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let mat = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat_int(1)],
            vec![rat(1, 6), rat(1, 9)],
        ]);
        assert_eq!(mat.rank(), 1);
    }

    #[test]
    fn solve_square() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[rat_int(5), rat_int(10)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(3)]);
        assert!(m(&[&[1, 2], &[2, 4]])
            .solve(&[rat_int(1), rat_int(1)])
            .is_none());
    }

    #[test]
    fn companion_and_poly_eval() {
        // a = x^2 - 3x + 1, companion acts as multiplication by x
        let a = UniPoly::from_coeffs(vec![rat_int(1), rat_int(-3), rat_int(1)]);
        let x = RationalMatrix::companion(&a).unwrap();
        // x^3 mod a = 8x - 3: first column of X^3 is (-3, 8)
        let x3 = x.pow(3).unwrap();
        assert_eq!(x3.get(0, 0), &rat_int(-3));
        assert_eq!(x3.get(1, 0), &rat_int(8));
        // b(X) with b = x - 1 on a = (x-1)^2 is nilpotent
        let a = UniPoly::from_coeffs(vec![rat_int(1), rat_int(-2), rat_int(1)]);
        let b = UniPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        let bx = RationalMatrix::eval_poly(&b, &RationalMatrix::companion(&a).unwrap()).unwrap();
        assert!(!bx.is_zero());
        assert!(bx.pow(2).unwrap().is_zero());
    }
}
