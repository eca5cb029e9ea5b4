//! Error type shared by every module of the crate.

use crate::lcfield::Exponent;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Division by a series with no stored terms (null at its order).
    #[error("division by a series that is null at order {order}")]
    NullDivision { order: Exponent },

    /// Square root (or fractional power) of a series whose leading
    /// coefficient is not strictly positive.
    #[error("root of a series without a positive leading coefficient")]
    NotPositive,

    /// Evaluation left the moderate range: the result is larger than every
    /// s^-n, or has no representation as a truncated series.
    #[error("not moderate: {0}")]
    NotModerate(String),

    /// Argument outside a primitive's real domain (e.g. log at 0).
    #[error("domain error: {0}")]
    Domain(String),

    /// Standard part of a point lies outside the attached domain.
    #[error("point {0:?} is outside the domain")]
    OutsideDomain(Vec<f64>),

    /// A perturbation that must be infinitesimal has a coordinate with
    /// valuation <= 0.
    #[error("vector is not infinitesimal (coordinate {coord} has valuation {valuation})")]
    NotInfinitesimal { coord: usize, valuation: Exponent },

    /// The fundamental-theorem checks require an arcwise connected domain.
    #[error("domain is not arcwise connected")]
    NotConnected,

    /// Exponent denominator grew past the supported bound.
    #[error("exponent denominator {0} exceeds the bound {max}", max = Exponent::MAX_DENOMINATOR)]
    DenominatorLimit(i64),

    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
