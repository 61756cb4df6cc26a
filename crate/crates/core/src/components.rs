//! Enumeration of irreducible components.
//!
//! Locally (`y^beta = 0`) the components are the bounded-part partitions of
//! n; for a curve with several non-reduced branches they are tuples of
//! per-branch bounded partitions with total size n, each of dimension n. A
//! generating-function count (product of `1/(1 - q^k)` over `k <= beta_j` per
//! branch) cross-checks the enumeration.

use crate::partitions::{partitions_bounded, Partition};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BranchSpec {
    pub label: String,
    pub beta: usize,
}

/// A plane curve given as a product of distinct irreducible branches with
/// multiplicities. Branches are opaque here: only the multiplicities enter
/// the component combinatorics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveSpec {
    branches: Vec<BranchSpec>,
}

impl CurveSpec {
    pub fn new(branches: Vec<BranchSpec>) -> Self {
        assert!(
            branches.iter().all(|b| b.beta >= 1),
            "multiplicities must be positive"
        );
        let mut labels: Vec<&str> = branches.iter().map(|b| b.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(
            labels.len(),
            branches.len(),
            "branch labels must be distinct"
        );
        CurveSpec { branches }
    }

    /// Branches labeled `f1, f2, ...` with the given multiplicities.
    pub fn from_betas(betas: &[usize]) -> Self {
        CurveSpec::new(
            betas
                .iter()
                .enumerate()
                .map(|(i, &beta)| BranchSpec {
                    label: format!("f{}", i + 1),
                    beta,
                })
                .collect(),
        )
    }

    pub fn branches(&self) -> &[BranchSpec] {
        &self.branches
    }

    pub fn betas(&self) -> Vec<usize> {
        self.branches.iter().map(|b| b.beta).collect()
    }
}

/// One irreducible component: a partition per branch (parts bounded by that
/// branch's multiplicity), total size n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentIndex {
    per_branch: Vec<Partition>,
}

impl ComponentIndex {
    pub fn per_branch(&self) -> &[Partition] {
        &self.per_branch
    }

    pub fn total(&self) -> usize {
        self.per_branch.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for ComponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.per_branch.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Components of the local model: partitions of n with parts at most beta.
/// Every one of them has dimension n.
pub fn components_local(n: usize, beta: usize) -> Vec<Partition> {
    assert!(beta >= 1);
    partitions_bounded(n, beta)
}

/// Components for a multi-branch curve: all tuples of per-branch bounded
/// partitions with total size n, branches in spec order and sizes assigned
/// largest-first so the output order is deterministic.
pub fn components_curve(n: usize, spec: &CurveSpec) -> Vec<ComponentIndex> {
    let betas = spec.betas();
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::with_capacity(betas.len());
    fn rec(n: usize, betas: &[usize], current: &mut Vec<Partition>, out: &mut Vec<ComponentIndex>) {
        if betas.is_empty() {
            if n == 0 {
                out.push(ComponentIndex {
                    per_branch: current.clone(),
                });
            }
            return;
        }
        for size in (0..=n).rev() {
            let parts = if size == 0 {
                vec![Partition::empty()]
            } else {
                partitions_bounded(size, betas[0])
            };
            for p in parts {
                current.push(p);
                rec(n - size, &betas[1..], current, out);
                current.pop();
            }
        }
    }
    rec(n, &betas, &mut current, &mut out);
    out
}

/// Number of components by generating function: the coefficient of `q^n` in
/// `prod_j prod_{1 <= k <= beta_j} (1 - q^k)^{-1}`, computed by the
/// bounded-part counting recurrence. Independent of the enumeration.
pub fn count_components(n: usize, spec: &CurveSpec) -> u64 {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for beta in spec.betas() {
        for k in 1..=beta.min(n.max(1)) {
            // multiply by 1/(1 - q^k): prefix-sum with stride k
            for i in k..=n {
                coeffs[i] = coeffs[i]
                    .checked_add(coeffs[i - k])
                    .expect("component count overflows u64");
            }
        }
    }
    coeffs[n]
}
