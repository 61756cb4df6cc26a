//! Exact-arithmetic toolkit for Hilbert schemes of points on non-reduced
//! plane curves.
//!
//! Everything is computed over the rationals with no rounding anywhere:
//! dense univariate and sparse multivariate polynomials, dual numbers for
//! exact Jacobians, fraction-free matrix ranks, Haiman-style chart
//! presentations, the stratification of the `y^beta` locus, component
//! enumeration, and tangent-space dimension checks.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything is safe to share across threads; samplers take
//! explicit seeds.
//!
//! ```
//! use hilbcurve::{rat_int, ChartIdealN, UniPoly};
//!
//! // a = (x - 1)^2, b = x - 1: the ideal contains y^2 but not y
//! let a = UniPoly::from_coeffs(vec![rat_int(1), rat_int(-2), rat_int(1)]);
//! let b = UniPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
//! let ideal = ChartIdealN::new(a, b).unwrap();
//! assert!(!ideal.contains_power_y(1));
//! assert!(ideal.contains_power_y(2));
//! assert_eq!(ideal.hilbert_chow_profile().mults(), &[2]);
//! ```

pub mod chart_mu;
pub mod chart_un;
pub mod components;
pub mod dimcheck;
pub mod dual;
pub mod error;
pub mod matrix;
pub mod multipoly;
pub mod partitions;
pub mod rational;
pub mod scalar;
pub mod strata;
pub mod unipoly;

pub use chart_mu::{
    build_presentation, embed_un_point, Assignment, ChartPresentation, RelationSystem,
};
pub use chart_un::{ChartIdealN, MultiplicityProfile};
pub use components::{
    components_curve, components_local, count_components, ComponentIndex, CurveSpec,
};
pub use dimcheck::{param_rank, tangent_dim_un, verify_dims, DimReport, LabelReport};
pub use dual::DualNumber;
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use multipoly::{SparseMultiPoly, Subst, VarSet};
pub use partitions::{
    all_partitions, basis_monomials, border_monomials, complement_corners, partitions_bounded,
    rows_at_most, Monomial, Partition, YoungDiagram,
};
pub use rational::{rat, rat_int, rational_to_string, Rational};
pub use scalar::Scalar;
pub use strata::{
    build_stratum_ideal, classify_ideal, sample_stratum, CaseKind, StratumLabel, StratumPoint,
};
pub use unipoly::UniPoly;
