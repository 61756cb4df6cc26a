//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    DivisionByZeroPoly,
    /// The leading coefficient of the divisor is not invertible.
    NonInvertibleLeadingCoeff,
    /// An operation required a nonzero polynomial.
    ZeroPolynomial,
    /// The modulus of a reduction must be monic of degree at least one.
    BadModulus,
    /// A chart ideal requires a monic generator a(x) of degree at least one.
    NotMonic,
    /// A variable name was not found in the active variable set.
    UnknownVariable(String),
    /// An assignment did not cover a required variable.
    IncompleteAssignment(String),
    /// Stratum sample points must be pairwise distinct.
    DuplicateSamplePoints,
    /// The cofactor alpha exceeds its maximal degree for the stratum.
    AlphaDegreeTooLarge { degree: usize, max: usize },
    /// A general-case stratum point is missing its cofactor alpha.
    AlphaMissing,
    /// A special-case stratum point must not carry a cofactor.
    AlphaForbidden,
    /// Stratum point data does not match the label it was paired with.
    LabelMismatch,
    /// The queried point does not satisfy the defining equations.
    NotOnVariety,
    /// Parametrization ranks are defined for general-case strata only.
    SpecialCaseParam,
    /// Chart presentations require a nonempty partition.
    EmptyPartition,
    /// Matrix dimensions do not match the requested operation.
    DimensionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroPoly => write!(f, "division by the zero polynomial"),
            Error::NonInvertibleLeadingCoeff => {
                write!(f, "leading coefficient of the divisor is not invertible")
            }
            Error::ZeroPolynomial => write!(f, "operation requires a nonzero polynomial"),
            Error::BadModulus => write!(f, "modulus must be monic of degree at least 1"),
            Error::NotMonic => write!(f, "a(x) must be monic of degree at least 1"),
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::IncompleteAssignment(name) => {
                write!(f, "assignment is missing variable `{name}`")
            }
            Error::DuplicateSamplePoints => write!(f, "sample points must be pairwise distinct"),
            Error::AlphaDegreeTooLarge { degree, max } => {
                write!(f, "alpha has degree {degree}, maximum allowed is {max}")
            }
            Error::AlphaMissing => write!(f, "general-case stratum point requires alpha"),
            Error::AlphaForbidden => write!(f, "special-case stratum point must have no alpha"),
            Error::LabelMismatch => write!(f, "stratum point does not match its label"),
            Error::NotOnVariety => write!(f, "point does not satisfy the defining equations"),
            Error::SpecialCaseParam => {
                write!(
                    f,
                    "parametrization rank is defined for general-case strata only"
                )
            }
            Error::EmptyPartition => write!(f, "chart presentations require a nonempty partition"),
            Error::DimensionMismatch => write!(f, "matrix dimensions do not match"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
