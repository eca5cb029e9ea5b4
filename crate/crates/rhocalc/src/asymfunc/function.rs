//! Asymptotic functions: an expression tree over a domain, evaluated at
//! nearstandard points.

use super::expr::{Expr, MultiIndex};
use crate::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
use crate::error::{Error, Result};
use crate::lcfield::{AsymptoticComplex, AsymptoticScalar, Exponent, PrimitiveId};
use std::fmt;
use std::sync::Arc;

/// Offsets used when a pointwise test is sampled over a domain: the
/// standard point itself, a plain scale displacement, and a scaled
/// second-order one.
const SAMPLE_OFFSETS: [(f64, i64); 3] = [(0.0, 1), (1.0, 1), (0.37, 2)];

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticFunction {
    expr: Arc<Expr>,
    dom: DomainSpec,
}

impl AsymptoticFunction {
    pub fn new(expr: Arc<Expr>, dom: DomainSpec) -> Result<Self> {
        if expr.arity() > dom.dim() {
            return Err(Error::UnboundVariable(format!(
                "expression uses {} variables but the domain has dimension {}",
                expr.arity(),
                dom.dim()
            )));
        }
        Ok(AsymptoticFunction { expr, dom })
    }

    /// Canonical embedding of a smooth primitive as a function of the first
    /// coordinate.
    pub fn lift_primitive(p: PrimitiveId, dom: DomainSpec) -> Result<Self> {
        if dom.dim() != 1 {
            return Err(Error::InvalidArgument(
                "primitive lifting expects a one-dimensional domain".into(),
            ));
        }
        Self::new(Expr::comp(p, Expr::var(0)), dom)
    }

    /// The delta-model kernel `s^-1 * gauss_phi(x * s^-1)`.
    ///
    /// The Gaussian kernel has closed-form derivatives and decays faster
    /// than every power of the scale, but its higher moments do not vanish:
    /// multiplying a lifted smooth function into this model and embedding
    /// the classical product are different elements in general. Products
    /// here are honest pointwise products of the models.
    pub fn embed_delta(dom: DomainSpec) -> Result<Self> {
        if dom.dim() != 1 {
            return Err(Error::InvalidArgument("delta embedding requires d = 1".into()));
        }
        Self::new(delta_expr(Expr::var(0)), dom)
    }

    /// The step-model kernel `gauss_Phi(x * s^-1)`.
    pub fn embed_heaviside(dom: DomainSpec) -> Result<Self> {
        if dom.dim() != 1 {
            return Err(Error::InvalidArgument("heaviside embedding requires d = 1".into()));
        }
        Self::new(heaviside_expr(Expr::var(0)), dom)
    }

    /// The constant function with value `c`: a variable-free tree made of
    /// scale powers.
    pub fn constant_function(c: &AsymptoticComplex, dom: DomainSpec) -> Self {
        let mut exps: Vec<Exponent> = c
            .re()
            .terms()
            .iter()
            .chain(c.im().terms().iter())
            .map(|t| t.0)
            .collect();
        exps.sort();
        exps.dedup();
        let mut tree = Expr::real(0.0);
        for e in exps {
            let coeff = Expr::complex(c.re().coeff_at(e), c.im().coeff_at(e));
            tree = Expr::add(tree, Expr::mul(coeff, Expr::rho_pow(e)));
        }
        AsymptoticFunction { expr: tree, dom }
    }

    pub fn expr(&self) -> &Arc<Expr> {
        &self.expr
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.dom
    }

    pub fn dim(&self) -> usize {
        self.dom.dim()
    }

    /// Symbolic partial derivative along coordinate `i`.
    pub fn partial(&self, i: usize) -> Self {
        AsymptoticFunction { expr: self.expr.derivative(i), dom: self.dom.clone() }
    }

    /// Iterated symbolic derivative `D^alpha`.
    pub fn differentiate(&self, alpha: &MultiIndex) -> Self {
        let mut expr = self.expr.clone();
        for (i, &k) in alpha.components().iter().enumerate() {
            for _ in 0..k {
                expr = expr.derivative(i);
            }
        }
        AsymptoticFunction { expr, dom: self.dom.clone() }
    }

    /// All first partials.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.dim()).map(|i| self.partial(i)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dom, other.dom);
        AsymptoticFunction {
            expr: Expr::add(self.expr.clone(), other.expr.clone()),
            dom: self.dom.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dom, other.dom);
        AsymptoticFunction {
            expr: Expr::sub(self.expr.clone(), other.expr.clone()),
            dom: self.dom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dom, other.dom);
        AsymptoticFunction {
            expr: Expr::mul(self.expr.clone(), other.expr.clone()),
            dom: self.dom.clone(),
        }
    }

    /// The value `F(p)` as an asymptotic number.
    ///
    /// Literal leaves (constants, scale powers, the point's coordinate
    /// series) are exact data, so the recursion runs at a widened working
    /// order and the result is truncated back to the point's order; this
    /// keeps the reported horizon from degrading through intermediate
    /// products with negative valuation.
    pub fn evaluate(&self, p: &AsymptoticPoint) -> Result<AsymptoticComplex> {
        if p.dim() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "point dimension {} does not match domain dimension {}",
                p.dim(),
                self.dim()
            )));
        }
        if !self.dom.contains(p.standard_part()) {
            return Err(Error::OutsideDomain(p.standard_part().to_vec()));
        }
        let report_order = p.order();
        let working = report_order.mul_int(2) + 16;
        let v = eval_rec(&self.expr, p, working).map_err(|e| match e {
            // orders surfacing in errors stay at the reporting horizon
            Error::NullDivision { order } if order > report_order => {
                Error::NullDivision { order: report_order }
            }
            other => other,
        })?;
        Ok(v.truncate(report_order))
    }

    /// Whether all derivatives up to total order `depth` vanish at `p`
    /// (i.e. evaluate to series with no stored terms).
    pub fn is_null_at(&self, p: &AsymptoticPoint, depth: usize) -> Result<crate::lcfield::SeriesVerdict> {
        for alpha in MultiIndex::all_up_to(self.dim(), depth) {
            let v = self.differentiate(&alpha).evaluate(p)?;
            if !v.is_null() {
                return Ok(crate::lcfield::SeriesVerdict::Fails);
            }
        }
        Ok(crate::lcfield::SeriesVerdict::Holds)
    }

    /// Factor-space equality: `F - G` is null (with derivatives up to
    /// `depth`) at `samples` deterministic domain points, each probed with
    /// the standard offsets.
    pub fn equal_mod_null(
        &self,
        other: &Self,
        samples: usize,
        depth: usize,
        seed: u64,
    ) -> Result<crate::lcfield::SeriesVerdict> {
        if self.dom != other.dom {
            return Err(Error::InvalidArgument(
                "equality is only defined over a common domain".into(),
            ));
        }
        let diff = self.sub(other);
        for p in sample_points(&self.dom, seed, samples, crate::lcfield::default_order())? {
            if diff.is_null_at(&p, depth)? == crate::lcfield::SeriesVerdict::Fails {
                return Ok(crate::lcfield::SeriesVerdict::Fails);
            }
        }
        Ok(crate::lcfield::SeriesVerdict::Holds)
    }
}

/// `s^-1 * gauss_phi(arg * s^-1)` for an arbitrary argument tree.
pub fn delta_expr(arg: Arc<Expr>) -> Arc<Expr> {
    let inv_s = Expr::rho_pow(Exponent::integer(-1));
    Expr::mul(
        inv_s.clone(),
        Expr::comp(PrimitiveId::GaussPhi, Expr::mul(arg, inv_s)),
    )
}

/// `gauss_Phi(arg * s^-1)` for an arbitrary argument tree.
pub fn heaviside_expr(arg: Arc<Expr>) -> Arc<Expr> {
    let inv_s = Expr::rho_pow(Exponent::integer(-1));
    Expr::comp(PrimitiveId::GaussCumulative, Expr::mul(arg, inv_s))
}

/// Deterministic nearstandard sample points: sampler points of the domain
/// combined with the standard offsets {0, s, 0.37 s^2} on every coordinate.
pub fn sample_points(
    dom: &DomainSpec,
    seed: u64,
    samples: usize,
    order: Exponent,
) -> Result<Vec<AsymptoticPoint>> {
    let mut out = Vec::with_capacity(samples * SAMPLE_OFFSETS.len());
    for x in dom.sample(seed, samples) {
        for (c, e) in SAMPLE_OFFSETS {
            let h = AsymptoticVector::new(vec![
                AsymptoticScalar::monomial(c, Exponent::integer(e), order);
                dom.dim()
            ]);
            out.push(AsymptoticPoint::nearstandard(x.clone(), h, dom)?);
        }
    }
    Ok(out)
}

fn eval_rec(expr: &Expr, p: &AsymptoticPoint, order: Exponent) -> Result<AsymptoticComplex> {
    match expr {
        Expr::Var(i) => Ok(AsymptoticComplex::from_real(p.coordinate(*i).with_order(order))),
        Expr::Const { re, im } => Ok(AsymptoticComplex::constant(*re, *im, order)),
        Expr::RhoPow(q) => {
            Ok(AsymptoticComplex::from_real(AsymptoticScalar::scale_pow(*q, order)))
        }
        Expr::Add(a, b) => Ok(eval_rec(a, p, order)?.add(&eval_rec(b, p, order)?)),
        Expr::Mul(a, b) => Ok(eval_rec(a, p, order)?.mul(&eval_rec(b, p, order)?)),
        Expr::Pow(e, q) => {
            let v = eval_rec(e, p, order)?;
            if q.is_integer() {
                return v.int_pow(q.num());
            }
            if !v.is_real() {
                return Err(Error::Domain(
                    "fractional power of a series with nonzero imaginary part".into(),
                ));
            }
            Ok(AsymptoticComplex::from_real(v.re().pow_rational(*q)?))
        }
        Expr::Comp(prim, e) => {
            let v = eval_rec(e, p, order)?;
            if let PrimitiveId::Poly(k) = prim {
                return v.int_pow(*k as i64);
            }
            if !v.is_real() {
                return Err(Error::Domain(format!(
                    "{prim} applied to a series with nonzero imaginary part"
                )));
            }
            Ok(AsymptoticComplex::from_real(v.re().lift_analytic(*prim)?))
        }
    }
}

/// The pointwise function object `V(F)`: a callable closing over the
/// function, so ring operations on functions correspond to pointwise
/// operations on values.
#[derive(Clone, Debug)]
pub struct ValueMap {
    func: AsymptoticFunction,
}

impl ValueMap {
    pub fn new(func: AsymptoticFunction) -> Self {
        ValueMap { func }
    }

    pub fn call(&self, p: &AsymptoticPoint) -> Result<AsymptoticComplex> {
        self.func.evaluate(p)
    }

    pub fn function(&self) -> &AsymptoticFunction {
        &self.func
    }
}

impl fmt::Display for AsymptoticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}
