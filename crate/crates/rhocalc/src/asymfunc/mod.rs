//! Representatives of asymptotic functions: expression trees over a domain,
//! smooth-function and distribution embeddings, evaluation at nearstandard
//! points, and sampled null testing.

mod expr;
mod function;
mod randexpr;

pub use expr::{Expr, MultiIndex};
pub use function::{
    delta_expr, heaviside_expr, sample_points, AsymptoticFunction, ValueMap,
};
pub use randexpr::ExprGen;
