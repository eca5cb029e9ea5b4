//! A computable model of asymptotic numbers and asymptotic functions:
//! truncated Levi-Civita series arithmetic, generalized functions evaluated
//! at nearstandard points, and executable checks of their pointwise
//! calculus.
//!
//! The crate is organized along the model's layers:
//!
//! - [`lcfield`]: series arithmetic, ordering, valuation, analytic lifting;
//! - [`asymvec`]: vectors, norms, domains and nearstandard points;
//! - [`asymfunc`]: expression trees, distribution embeddings, evaluation;
//! - [`calculus`]: limit checkers, scalar detection, line integrals;
//! - [`cli`]: the expression DSL and the `rhocalc` command-line tool.
//!
//! See the `examples/` directory for runnable walkthroughs of each layer.

pub mod error;
pub mod lcfield;
pub mod asymvec;
pub mod asymfunc;
pub mod calculus;
pub mod cli;

pub use asymfunc::{AsymptoticFunction, Expr, MultiIndex};
pub use asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
pub use error::{Error, Result};
pub use lcfield::{
    AsymptoticComplex, AsymptoticScalar, Classification, Comparison, Exponent, PrimitiveId,
    SeriesVerdict,
};
