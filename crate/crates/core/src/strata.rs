//! Stratification of the `y^beta` locus inside the one-row chart.
//!
//! A stratum is labeled by the multiplicities `m_1 >= ... >= m_s` of the
//! Hilbert-Chow image. In the general case, `sum ceil(m_i/beta) <= n - 1`,
//! its ideals are exactly
//! `a = prod (x - x_i)^{m_i}`, `b = prod (x - x_i)^{ceil(m_i/beta)} * alpha`
//! with `deg alpha <= t = n - 1 - sum ceil(m_i/beta)`; in the special case
//! (`> n - 1`) the only possibility is `b = 0`. Either way the stratum has
//! dimension `n + s - sum ceil(m_i/beta)`.

use crate::chart_un::ChartIdealN;
use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

use crate::partitions::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseKind {
    General,
    Special,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseKind::General => write!(f, "general"),
            CaseKind::Special => write!(f, "special"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratumLabel {
    mults: Partition,
    n: usize,
    beta: usize,
}

impl StratumLabel {
    pub fn new(mults: Partition, beta: usize) -> Self {
        assert!(beta >= 1, "beta must be positive");
        assert!(!mults.is_empty(), "a stratum needs at least one point");
        let n = mults.size();
        StratumLabel { mults, n, beta }
    }

    pub fn mults(&self) -> &Partition {
        &self.mults
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Number of distinct points.
    pub fn points(&self) -> usize {
        self.mults.rows()
    }

    pub fn ceil_sum(&self) -> usize {
        self.mults
            .parts()
            .iter()
            .map(|&m| m.div_ceil(self.beta))
            .sum()
    }

    /// Special exactly when `sum ceil(m_i/beta) > n - 1`.
    pub fn classify_case(&self) -> CaseKind {
        if self.ceil_sum() > self.n - 1 {
            CaseKind::Special
        } else {
            CaseKind::General
        }
    }

    /// Maximal degree of the cofactor alpha; `None` in the special case.
    pub fn max_alpha_degree(&self) -> Option<usize> {
        match self.classify_case() {
            CaseKind::Special => None,
            CaseKind::General => Some(self.n - 1 - self.ceil_sum()),
        }
    }

    /// `n + s - sum ceil(m_i/beta)`; covers both cases (general `t + s + 1`
    /// and special `s`).
    pub fn dimension(&self) -> usize {
        self.n + self.points() - self.ceil_sum()
    }

    /// A stratum closure is an irreducible component exactly when its
    /// dimension reaches n, i.e. all multiplicities are at most beta.
    pub fn is_component(&self) -> bool {
        self.dimension() == self.n
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{} (n={}, beta={})", self.mults, self.n, self.beta)
    }
}

/// Concrete sample data for a stratum: distinct x-coordinates paired with
/// multiplicities, and the cofactor alpha in the general case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratumPoint {
    pub points: Vec<Rational>,
    pub mults: Vec<usize>,
    pub alpha: Option<UniPoly>,
}

/// Builds the ideal of a stratum point.
pub fn build_stratum_ideal(label: &StratumLabel, pt: &StratumPoint) -> Result<ChartIdealN> {
    if pt.points.len() != pt.mults.len() {
        return Err(Error::LabelMismatch);
    }
    let sorted = Partition::from_unsorted(pt.mults.clone());
    if &sorted != label.mults() {
        return Err(Error::LabelMismatch);
    }
    for (i, p) in pt.points.iter().enumerate() {
        if pt.points[i + 1..].contains(p) {
            return Err(Error::DuplicateSamplePoints);
        }
    }
    let roots_a: Vec<(Rational, usize)> = pt
        .points
        .iter()
        .cloned()
        .zip(pt.mults.iter().copied())
        .collect();
    let a = UniPoly::from_roots(&roots_a);
    let b = match label.classify_case() {
        CaseKind::Special => {
            if pt.alpha.is_some() {
                return Err(Error::AlphaForbidden);
            }
            UniPoly::zero()
        }
        CaseKind::General => {
            let alpha = pt.alpha.as_ref().ok_or(Error::AlphaMissing)?;
            let t = label.max_alpha_degree().unwrap();
            if let Some(d) = alpha.degree() {
                if d > t {
                    return Err(Error::AlphaDegreeTooLarge { degree: d, max: t });
                }
            }
            let roots_b: Vec<(Rational, usize)> = pt
                .points
                .iter()
                .cloned()
                .zip(pt.mults.iter().map(|&m| m.div_ceil(label.beta())))
                .collect();
            UniPoly::from_roots(&roots_b).mul(alpha)
        }
    };
    ChartIdealN::new(a, b)
}

/// Label of the stratum containing an ideal, or `None` when `y^beta` is not
/// in the ideal at all.
pub fn classify_ideal(ideal: &ChartIdealN, beta: usize) -> Option<StratumLabel> {
    if !ideal.contains_power_y(beta) {
        return None;
    }
    let profile = ideal.hilbert_chow_profile();
    Some(StratumLabel::new(profile.0, beta))
}

/// Splitmix-style mixing for stable derived seeds.
pub fn mix_seed(a: u64, b: u64) -> u64 {
    let mut z = a ^ b.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Draws a deterministic stratum point: distinct integer roots from a fixed
/// bounded range (re-drawn on collision) and, in the general case, a random
/// alpha of degree exactly t with nonzero leading coefficient and no root at
/// any of the sampled points.
pub fn sample_stratum(label: &StratumLabel, seed: u64) -> StratumPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 0x5741_u64));
    let s = label.points();
    assert!(s <= 100, "sampling range holds at most 100 distinct points");
    let mut points: Vec<Rational> = Vec::with_capacity(s);
    while points.len() < s {
        let candidate = rat_int(rng.random_range(-50..=50));
        if !points.contains(&candidate) {
            points.push(candidate);
        }
    }
    let mults = label.mults().parts().to_vec();
    let alpha = match label.max_alpha_degree() {
        None => None,
        Some(t) => {
            let mut draw = |nonzero: bool| -> Rational {
                loop {
                    let num = rng.random_range(-9_i64..=9);
                    if nonzero && num == 0 {
                        continue;
                    }
                    let den = rng.random_range(1_i64..=4);
                    return Rational::new(num.into(), den.into());
                }
            };
            loop {
                let mut coeffs: Vec<Rational> = (0..t).map(|_| draw(false)).collect();
                coeffs.push(draw(true));
                let alpha = UniPoly::from_coeffs(coeffs);
                if points.iter().all(|p| !Scalar::is_zero(&alpha.eval(p))) {
                    break Some(alpha);
                }
            }
        }
    };
    StratumPoint {
        points,
        mults,
        alpha,
    }
}
