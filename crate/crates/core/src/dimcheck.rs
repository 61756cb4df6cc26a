//! Tangent-space and parametrization-rank checks at sampled rational points.
//!
//! The defining map F of the `y^beta` locus in the one-row chart sends the 2n
//! chart coordinates to the n coefficients of `b^beta mod a`. Jacobians are
//! assembled column by column from dual-number evaluations, so every entry
//! is an exact rational. Tangent dimension at a point of the locus is
//! `2n - rank(J_F)`; it is always at least n and the paper's dimension
//! formula predicts the generic rank of each stratum parametrization.

use crate::dual::DualNumber;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::strata::{
    build_stratum_ideal, mix_seed, sample_stratum, CaseKind, StratumLabel, StratumPoint,
};
use crate::unipoly::UniPoly;

/// Exact Jacobian of `f` at `point`, one dual-number sweep per input.
pub fn jacobian<F>(f: F, point: &[Rational]) -> RationalMatrix
where
    F: Fn(&[DualNumber]) -> Vec<DualNumber>,
{
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(point.len());
    let mut out_len = 0;
    for i in 0..point.len() {
        let inputs: Vec<DualNumber> = point
            .iter()
            .enumerate()
            .map(|(j, v)| {
                if i == j {
                    DualNumber::variable(v.clone())
                } else {
                    DualNumber::constant(v.clone())
                }
            })
            .collect();
        let outputs = f(&inputs);
        out_len = outputs.len();
        columns.push(outputs.into_iter().map(|d| d.infinitesimal).collect());
    }
    let mut m = RationalMatrix::zeros(out_len, point.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

/// The constraint map of the `y^beta` locus: inputs are the chart
/// coordinates `(a_0..a_{n-1}, b_0..b_{n-1})` with
/// `a(x) = x^n - a_{n-1} x^{n-1} - ... - a_0`; outputs are the n
/// coefficients of `b(x)^beta mod a(x)`.
pub fn constraint_map(n: usize, beta: usize, input: &[DualNumber]) -> Vec<DualNumber> {
    assert_eq!(input.len(), 2 * n, "expected 2n chart coordinates");
    let mut a_coeffs: Vec<DualNumber> = input[..n].iter().map(Scalar::neg).collect();
    a_coeffs.push(Scalar::one());
    let a = UniPoly::from_coeffs(a_coeffs);
    let b = UniPoly::from_coeffs(input[n..].to_vec());
    let r = b.powmod(beta as u64, &a).unwrap();
    (0..n).map(|i| r.coeff(i)).collect()
}

/// Rational-path residual of the constraint map.
pub fn constraint_residual(n: usize, beta: usize, point: &[Rational]) -> Vec<Rational> {
    let duals: Vec<DualNumber> = point
        .iter()
        .map(|v| DualNumber::constant(v.clone()))
        .collect();
    constraint_map(n, beta, &duals)
        .into_iter()
        .map(|d| d.value)
        .collect()
}

/// Tangent dimension `2n - rank(J_F)` at a point of the `y^beta` locus.
/// Errors when the point does not satisfy the constraints.
pub fn tangent_dim_un(n: usize, beta: usize, point: &[Rational]) -> Result<usize> {
    if point.len() != 2 * n {
        return Err(Error::DimensionMismatch);
    }
    if !constraint_residual(n, beta, point)
        .iter()
        .all(Scalar::is_zero)
    {
        return Err(Error::NotOnVariety);
    }
    let j = jacobian(|input| constraint_map(n, beta, input), point);
    Ok(2 * n - j.rank())
}

/// The general-case stratum parametrization
/// `(x_1..x_s, alpha_0..alpha_t) -> (a-coords, b-coords)`.
pub fn param_map(label: &StratumLabel, input: &[DualNumber]) -> Vec<DualNumber> {
    let s = label.points();
    let t = label.max_alpha_degree().expect("general case only");
    assert_eq!(
        input.len(),
        s + t + 1,
        "expected s roots and t+1 alpha coefficients"
    );
    let n = label.n();
    let beta = label.beta();
    let one: DualNumber = Scalar::one();
    let lin = |root: &DualNumber| UniPoly::from_coeffs(vec![Scalar::neg(root), one.clone()]);
    let mut a: UniPoly<DualNumber> = UniPoly::one();
    let mut bfac: UniPoly<DualNumber> = UniPoly::one();
    for (root, &m) in input[..s].iter().zip(label.mults().parts()) {
        a = a.mul(&lin(root).pow(m));
        bfac = bfac.mul(&lin(root).pow(m.div_ceil(beta)));
    }
    let alpha = UniPoly::from_coeffs(input[s..].to_vec());
    let b = bfac.mul(&alpha);
    let mut out: Vec<DualNumber> = (0..n).map(|i| Scalar::neg(&a.coeff(i))).collect();
    out.extend((0..n).map(|i| b.coeff(i)));
    out
}

/// Exact rank of the parametrization Jacobian at a stratum point; equals the
/// stratum dimension at generic samples.
pub fn param_rank(label: &StratumLabel, pt: &StratumPoint) -> Result<usize> {
    if label.classify_case() == CaseKind::Special {
        return Err(Error::SpecialCaseParam);
    }
    let alpha = pt.alpha.as_ref().ok_or(Error::AlphaMissing)?;
    let t = label.max_alpha_degree().unwrap();
    if let Some(d) = alpha.degree() {
        if d > t {
            return Err(Error::AlphaDegreeTooLarge { degree: d, max: t });
        }
    }
    let mut point: Vec<Rational> = pt.points.clone();
    point.extend((0..=t).map(|i| alpha.coeff(i)));
    let j = jacobian(|input| param_map(label, input), &point);
    Ok(j.rank())
}

/// Per-label outcome of a dimension verification run.
#[derive(Clone, Debug)]
pub struct LabelReport {
    pub mults: Vec<usize>,
    pub case: CaseKind,
    pub dim: usize,
    pub is_component: bool,
    /// Ranks of the parametrization Jacobian per trial (general case only).
    pub param_ranks: Vec<usize>,
    pub param_ok: bool,
    /// Observed tangent dimensions per trial (component labels only).
    pub tangent_dims: Vec<usize>,
    /// Hard lower bound: every observed tangent dimension is at least n.
    pub tangent_ge_n: bool,
    /// Recorded, not asserted: how often the tangent dimension came out
    /// exactly n. The equations cut the locus out non-reducedly wherever some
    /// multiplicity differs from beta (at a generic stratum point the
    /// observed value is `sum_i m_i + min(m_i, (beta-1)*c_i, beta*c_i - m_i)`
    /// with `c_i = ceil(m_i/beta)`, and 2n on the b = 0 stratum for
    /// beta >= 2), so equality holds exactly on components with every part
    /// equal to beta, and everywhere when beta = 1.
    pub tangent_eq_n_count: usize,
    pub seeds: Vec<u64>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct DimReport {
    pub n: usize,
    pub beta: usize,
    pub trials: usize,
    pub seed: u64,
    pub labels: Vec<LabelReport>,
    pub pass: bool,
}

/// Retries with fresh derived seeds when a sample is degenerate (rank below
/// the formula at a special rational point).
const PARAM_RETRIES: u64 = 5;

/// Runs the dimension checks for every stratum label of (n, beta):
/// parametrization ranks must equal the dimension formula on general-case
/// labels, and tangent dimensions at sampled component points must be at
/// least n. Deterministic for a fixed seed.
pub fn verify_dims(n: usize, beta: usize, trials: usize, seed: u64) -> DimReport {
    assert!(n >= 1 && beta >= 1);
    let mut labels = Vec::new();
    for (li, mults) in crate::partitions::all_partitions(n).into_iter().enumerate() {
        let label = StratumLabel::new(mults, beta);
        let case = label.classify_case();
        let dim = label.dimension();
        let is_component = label.is_component();
        let mut param_ranks = Vec::new();
        let mut tangent_dims = Vec::new();
        let mut seeds = Vec::new();
        let mut param_ok = true;
        let mut tangent_ge_n = true;
        let mut tangent_eq_n_count = 0;
        for trial in 0..trials {
            let trial_seed = mix_seed(seed, (li as u64) << 32 | trial as u64);
            seeds.push(trial_seed);
            if case == CaseKind::General {
                let mut rank = 0;
                for retry in 0..PARAM_RETRIES {
                    let pt = sample_stratum(&label, mix_seed(trial_seed, retry));
                    rank = param_rank(&label, &pt).unwrap();
                    if rank == dim {
                        break;
                    }
                }
                param_ok &= rank == dim;
                param_ranks.push(rank);
            }
            if is_component {
                let pt = sample_stratum(&label, trial_seed);
                let ideal = build_stratum_ideal(&label, &pt).unwrap();
                let td = tangent_dim_un(n, beta, &ideal.chart_coords()).unwrap();
                tangent_ge_n &= td >= n;
                if td == n {
                    tangent_eq_n_count += 1;
                }
                tangent_dims.push(td);
            }
        }
        let pass = param_ok && tangent_ge_n;
        labels.push(LabelReport {
            mults: label.mults().parts().to_vec(),
            case,
            dim,
            is_component,
            param_ranks,
            param_ok,
            tangent_dims,
            tangent_ge_n,
            tangent_eq_n_count,
            seeds,
            pass,
        });
    }
    let pass = labels.iter().all(|l| l.pass);
    DimReport {
        n,
        beta,
        trials,
        seed,
        labels,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::rational::rat_int;

    fn label(mults: &[usize], beta: usize) -> StratumLabel {
        StratumLabel::new(Partition::new(mults.to_vec()), beta)
    }

    #[test]
    fn tangent_at_general_point() {
        // ideal ((x-1)^2, y - (x-1)): chart coords a = (-1, 2), b = (-1, 1)
        let point = vec![rat_int(-1), rat_int(2), rat_int(-1), rat_int(1)];
        assert_eq!(tangent_dim_un(2, 2, &point).unwrap(), 2);
    }

    #[test]
    fn tangent_at_b_zero_sees_the_fat_structure() {
        // Along b = 0 with beta >= 2 every partial of b^beta vanishes, so the
        // Jacobian is zero and the tangent dimension is the whole 2n.
        let point = vec![rat_int(3), rat_int(5), rat_int(0), rat_int(0)];
        assert_eq!(tangent_dim_un(2, 2, &point).unwrap(), 4);
        // With beta = 1 the constraints are linear in b: tangent is exactly n.
        assert_eq!(tangent_dim_un(2, 1, &point).unwrap(), 2);
    }

    #[test]
    fn off_variety_is_an_error() {
        let point = vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)];
        assert_eq!(tangent_dim_un(2, 2, &point), Err(Error::NotOnVariety));
    }

    #[test]
    fn param_rank_examples() {
        for seed in 0..20 {
            let l = label(&[2, 1], 2);
            let pt = sample_stratum(&l, seed);
            assert_eq!(param_rank(&l, &pt).unwrap(), 3);
            let l = label(&[3], 2);
            let pt = sample_stratum(&l, seed);
            assert_eq!(param_rank(&l, &pt).unwrap(), 2);
        }
        let l = label(&[4], 4);
        let pt = sample_stratum(&l, 1);
        assert_eq!(param_rank(&l, &pt).unwrap(), 4);
        let special = label(&[1, 1], 2);
        let pt = sample_stratum(&special, 1);
        assert_eq!(param_rank(&special, &pt), Err(Error::SpecialCaseParam));
    }

    #[test]
    fn param_lands_in_variety() {
        for seed in 0..10 {
            for (mults, beta) in [(vec![2, 1], 2), (vec![3, 2], 2), (vec![4], 3)] {
                let l = StratumLabel::new(Partition::new(mults), beta);
                let pt = sample_stratum(&l, seed);
                let ideal = build_stratum_ideal(&l, &pt).unwrap();
                let res = constraint_residual(l.n(), beta, &ideal.chart_coords());
                assert!(res.iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn verify_dims_small() {
        let report = verify_dims(2, 2, 10, 42);
        assert!(report.pass);
        assert_eq!(report.labels.len(), 2);
        let by_mults = |m: &[usize]| report.labels.iter().find(|l| l.mults == m).unwrap().clone();
        let general = by_mults(&[2]);
        assert!(general.param_ranks.iter().all(|&r| r == 2));
        assert!(general.tangent_dims.iter().all(|&t| t == 2));
        let special = by_mults(&[1, 1]);
        assert!(special.param_ranks.is_empty());
        assert!(special.tangent_dims.iter().all(|&t| t == 4));
        assert!(special.tangent_ge_n);
        // determinism
        let again = verify_dims(2, 2, 10, 42);
        assert_eq!(again.labels[0].param_ranks, report.labels[0].param_ranks);
        assert_eq!(again.labels[0].seeds, report.labels[0].seeds);
    }

    #[test]
    fn verify_dims_three_points() {
        // (2,1) and (1,1,1) reach the full dimension 3; (3) stops at 2
        let report = verify_dims(3, 2, 10, 7);
        assert!(report.pass);
        let by_mults = |m: &[usize]| report.labels.iter().find(|l| l.mults == m).unwrap().clone();
        let skew = by_mults(&[2, 1]);
        assert_eq!(skew.dim, 3);
        assert!(skew.is_component);
        assert!(skew.param_ranks.iter().all(|&r| r == 3));
        let ones = by_mults(&[1, 1, 1]);
        assert_eq!(ones.dim, 3);
        assert!(ones.is_component);
        assert!(ones.param_ranks.is_empty()); // special case: roots only
        let fat = by_mults(&[3]);
        assert_eq!(fat.dim, 2);
        assert!(!fat.is_component);
        assert!(fat.param_ranks.iter().all(|&r| r == 2));
        assert!(fat.tangent_dims.is_empty()); // not a component, not sampled
    }

    #[test]
    fn verify_dims_reduced_line() {
        // beta = 1: every label is special; only the all-ones stratum has
        // dimension n
        let report = verify_dims(4, 1, 5, 9);
        assert!(report.pass);
        for l in &report.labels {
            assert_eq!(l.case, CaseKind::Special);
            assert_eq!(l.dim, l.mults.len());
            assert_eq!(l.is_component, l.mults.iter().all(|&m| m == 1));
            if l.is_component {
                assert!(l.tangent_dims.iter().all(|&t| t == 4));
            }
        }
    }
}
