//! Arithmetic, ordering, valuation and analytic lifting for truncated
//! Levi-Civita series: the computable model of the real and complex
//! asymptotic numbers.

mod complex;
mod exponent;
mod json;
mod primitive;
mod scalar;
mod verdict;

pub use complex::AsymptoticComplex;
pub(crate) use complex::null_sqrt;
pub use exponent::Exponent;
pub use json::{complex_from_json, complex_to_json, scalar_from_json, scalar_to_json};
pub use primitive::{PrimitiveId, TaylorCoeffs};
pub use scalar::{default_order, AsymptoticScalar, DEFAULT_ORDER, TAU};
pub use verdict::{Classification, Comparison, SeriesVerdict};
