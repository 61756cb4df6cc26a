//! Partitions, Young diagrams in French notation, and the monomial sets
//! attached to them.
//!
//! The diagram of `(4, 2, 1)` has box `(i, j)` exactly when `i < parts[j]`,
//! with `(0, 0)` the bottom-left box; the box `(i, j)` carries the monomial
//! `x^i y^j`. Basis monomials are the boxes, border monomials sit just
//! outside the diagram with a neighbor inside.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    /// Sorts the input descending, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. rows of the Young diagram.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when box `(i, j)` lies in the Young diagram.
    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        self.parts.get(j).is_some_and(|&len| i < len)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The monomial `x^r y^s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub r: usize,
    pub s: usize,
}

impl Monomial {
    pub fn new(r: usize, s: usize) -> Self {
        Monomial { r, s }
    }

    pub fn degree(&self) -> usize {
        self.r + self.s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r, self.s) {
            (0, 0) => write!(f, "1"),
            (r, 0) => write_power(f, "x", r),
            (0, s) => write_power(f, "y", s),
            (r, s) => {
                write_power(f, "x", r)?;
                write!(f, "*")?;
                write_power(f, "y", s)
            }
        }
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: usize) -> fmt::Result {
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

/// The box set of a partition, with membership queries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungDiagram {
    boxes: BTreeSet<(usize, usize)>,
}

impl YoungDiagram {
    pub fn of(mu: &Partition) -> Self {
        let mut boxes = BTreeSet::new();
        for (j, &len) in mu.parts().iter().enumerate() {
            for i in 0..len {
                boxes.insert((i, j));
            }
        }
        YoungDiagram { boxes }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.boxes.contains(&(m.r, m.s))
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

fn sort_monomials(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort_by_key(|m| (m.degree(), m.r));
    v
}

/// The boxes of `mu` as monomials, ordered by total degree then x-exponent.
pub fn basis_monomials(mu: &Partition) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(mu.size());
    for (j, &len) in mu.parts().iter().enumerate() {
        for i in 0..len {
            out.push(Monomial::new(i, j));
        }
    }
    sort_monomials(out)
}

/// Monomials outside `mu` whose x- or y-predecessor is a box of `mu`.
pub fn border_monomials(mu: &Partition) -> Vec<Monomial> {
    let mut out = BTreeSet::new();
    for (j, &len) in mu.parts().iter().enumerate() {
        for i in 0..len {
            for (r, s) in [(i + 1, j), (i, j + 1)] {
                if !mu.contains_box(r, s) {
                    out.insert(Monomial::new(r, s));
                }
            }
        }
    }
    if mu.is_empty() {
        return Vec::new();
    }
    sort_monomials(out.into_iter().collect())
}

/// Border monomials both of whose predecessors are inside `mu` or outside the
/// quadrant. Their expansions determine every other expansion.
pub fn complement_corners(mu: &Partition) -> Vec<Monomial> {
    border_monomials(mu)
        .into_iter()
        .filter(|m| {
            (m.r == 0 || mu.contains_box(m.r - 1, m.s))
                && (m.s == 0 || mu.contains_box(m.r, m.s - 1))
        })
        .collect()
}

/// All partitions of `n` with every part at most `max_part`, in
/// reverse-lexicographic order (largest first part first).
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        let hi = remaining.min(cap);
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, max_part, &mut current, &mut out);
    out
}

/// All partitions of `n`.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    partitions_bounded(n, n)
}

/// True when `mu` has at most `beta` rows.
pub fn rows_at_most(mu: &Partition, beta: usize) -> bool {
    mu.rows() <= beta
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn monos(pairs: &[(usize, usize)]) -> Vec<Monomial> {
        pairs.iter().map(|&(r, s)| Monomial::new(r, s)).collect()
    }

    #[test]
    fn basis_421() {
        // B_(4,2,1) = {1, x, x^2, x^3, y, xy, y^2}
        let b = basis_monomials(&p(&[4, 2, 1]));
        assert_eq!(b.len(), 7);
        let set: BTreeSet<_> = b.into_iter().collect();
        let expected: BTreeSet<_> =
            monos(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (0, 2)])
                .into_iter()
                .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn basis_row_and_empty() {
        let b = basis_monomials(&p(&[4]));
        assert_eq!(b, monos(&[(0, 0), (1, 0), (2, 0), (3, 0)]));
        assert!(basis_monomials(&Partition::empty()).is_empty());
    }

    #[test]
    fn border_21() {
        // border of (2,1) = {x^2, xy, y^2}
        let b: BTreeSet<_> = border_monomials(&p(&[2, 1])).into_iter().collect();
        assert_eq!(b, monos(&[(2, 0), (1, 1), (0, 2)]).into_iter().collect());
    }

    #[test]
    fn border_22() {
        let b: BTreeSet<_> = border_monomials(&p(&[2, 2])).into_iter().collect();
        assert_eq!(
            b,
            monos(&[(2, 0), (2, 1), (1, 2), (0, 2)])
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn border_of_row() {
        // border of (n) = {x^n, y, xy, ..., x^{n-1} y}
        let n = 4;
        let b: BTreeSet<_> = border_monomials(&p(&[n])).into_iter().collect();
        let mut expected = vec![(n, 0)];
        expected.extend((0..n).map(|h| (h, 1)));
        assert_eq!(b, monos(&expected).into_iter().collect());
    }

    #[test]
    fn corners() {
        assert_eq!(
            complement_corners(&p(&[2, 1])),
            monos(&[(0, 2), (1, 1), (2, 0)])
        );
        assert_eq!(complement_corners(&p(&[2])), monos(&[(0, 1), (2, 0)]));
        assert_eq!(complement_corners(&p(&[2, 2])), monos(&[(0, 2), (2, 0)]));
    }

    #[test]
    fn bounded_partitions() {
        let got: Vec<Vec<usize>> = partitions_bounded(3, 2)
            .iter()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![2, 1], vec![1, 1, 1]]);
        let got: Vec<Vec<usize>> = partitions_bounded(2, 2)
            .iter()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![2], vec![1, 1]]);
        assert_eq!(partitions_bounded(5, 1), vec![p(&[1, 1, 1, 1, 1])]);
    }

    #[test]
    fn rows_filter() {
        assert!(!rows_at_most(&p(&[1, 1, 1]), 2));
        assert!(rows_at_most(&p(&[2, 1]), 2));
        assert!(rows_at_most(&p(&[7]), 1));
    }

    #[test]
    fn conjugate_rows_equivalence() {
        for n in 0..=6 {
            for mu in all_partitions(n) {
                for beta in 1..=6 {
                    let via_conj = mu.conjugate().parts().iter().all(|&part| part <= beta);
                    assert_eq!(rows_at_most(&mu, beta), via_conj, "mu={mu} beta={beta}");
                }
            }
        }
    }
}
