//! Scalar detection and the gradient line integral: executable forms of the
//! fundamental-theorem equivalences.

use crate::asymfunc::{sample_points, AsymptoticFunction};
use crate::asymvec::AsymptoticPoint;
use crate::error::{Error, Result};
use crate::lcfield::{complex_to_json, AsymptoticComplex, SeriesVerdict};
use serde_json::value::RawValue;

use super::quadrature::gauss_legendre_unit;

#[derive(Clone, Debug)]
pub struct GradientSample {
    pub point: Vec<f64>,
    pub gradient: Vec<AsymptoticComplex>,
}

/// Outcome of testing whether a function is a scalar (vanishing gradient,
/// hence a constant with a value in the field).
#[derive(Clone, Debug)]
pub struct ScalarReport {
    pub is_scalar: SeriesVerdict,
    /// The common value, present exactly when the verdict holds.
    pub constant: Option<AsymptoticComplex>,
    pub gradient_evidence: Vec<GradientSample>,
    pub seed: u64,
}

impl ScalarReport {
    pub fn to_json(&self) -> String {
        let constant = self
            .constant
            .as_ref()
            .map(|c| RawValue::from_string(complex_to_json(c)).expect("valid JSON"));
        let evidence: Vec<serde_json::Value> = self
            .gradient_evidence
            .iter()
            .map(|g| {
                serde_json::json!({
                    "point": g.point,
                    "gradient": g.gradient.iter()
                        .map(|v| RawValue::from_string(complex_to_json(v)).expect("valid JSON"))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::to_string(&serde_json::json!({
            "check": "scalar",
            "verdict": self.is_scalar,
            "constant": constant,
            "gradient_evidence": evidence,
            "seed": self.seed,
        }))
        .expect("report serialization cannot fail")
    }
}

/// Tests the scalar equivalences on an arcwise connected domain: the
/// gradient must be null at every sampled nearstandard point, and then all
/// sampled values must agree at order; the common value is returned together
/// with its constant-function witness.
pub fn scalar_detect(
    f: &AsymptoticFunction,
    samples: usize,
    depth: usize,
    seed: u64,
) -> Result<(ScalarReport, Option<AsymptoticFunction>)> {
    if !f.domain().arcwise_connected() {
        return Err(Error::NotConnected);
    }
    let grad = f.gradient();
    let points = sample_points(f.domain(), seed, samples, crate::lcfield::default_order())?;
    let mut evidence = Vec::new();
    for p in &points {
        let mut failing = false;
        let mut values = Vec::with_capacity(grad.len());
        for g in &grad {
            values.push(g.evaluate(p)?);
            if g.is_null_at(p, depth)? == SeriesVerdict::Fails {
                failing = true;
            }
        }
        if failing {
            evidence.push(GradientSample { point: p.standard_part().to_vec(), gradient: values });
        }
    }
    if !evidence.is_empty() {
        let report =
            ScalarReport { is_scalar: SeriesVerdict::Fails, constant: None, gradient_evidence: evidence, seed };
        return Ok((report, None));
    }
    // gradient is null at all samples: the values must agree at order
    let constant = f.evaluate(&points[0])?;
    for p in &points[1..] {
        let v = f.evaluate(p)?;
        if !v.sub(&constant).is_null() {
            let report = ScalarReport {
                is_scalar: SeriesVerdict::Fails,
                constant: None,
                gradient_evidence: vec![GradientSample {
                    point: p.standard_part().to_vec(),
                    gradient: grad.iter().map(|g| g.evaluate(p)).collect::<Result<_>>()?,
                }],
                seed,
            };
            return Ok((report, None));
        }
    }
    let witness = AsymptoticFunction::constant_function(&constant, f.domain().clone());
    let report = ScalarReport {
        is_scalar: SeriesVerdict::Holds,
        constant: Some(constant),
        gradient_evidence: Vec::new(),
        seed,
    };
    Ok((report, Some(witness)))
}

/// Gauss-Legendre line integral of `grad F . dxi` along the straight
/// segment from `p1` to `p2`. The path parameter stays standard; the
/// endpoints carry the infinitesimal displacements. Exact (up to float
/// rounding) for polynomial integrands of degree <= 2*nodes - 1.
pub fn line_integral_gradient(
    f: &AsymptoticFunction,
    p1: &AsymptoticPoint,
    p2: &AsymptoticPoint,
    nodes: usize,
) -> Result<AsymptoticComplex> {
    if nodes < 2 {
        return Err(Error::InvalidArgument("quadrature needs at least 2 nodes".into()));
    }
    if p1.dim() != f.dim() || p2.dim() != f.dim() {
        return Err(Error::InvalidArgument("endpoint dimension mismatch".into()));
    }
    if !f.domain().segment_inside(p1.standard_part(), p2.standard_part(), 64) {
        return Err(Error::OutsideDomain(p2.standard_part().to_vec()));
    }
    let grad = f.gradient();
    let delta = p2.series_delta(p1);
    let (ts, ws) = gauss_legendre_unit(nodes);
    let order = p1.order().min(p2.order());
    let mut acc = AsymptoticComplex::zero(order);
    for (t, w) in ts.iter().zip(&ws) {
        let standard: Vec<f64> = p1
            .standard_part()
            .iter()
            .zip(p2.standard_part())
            .map(|(a, b)| a + t * (b - a))
            .collect();
        let infinitesimal = p1
            .infinitesimal_part()
            .scaled(1.0 - t)
            .add(&p2.infinitesimal_part().scaled(*t));
        let gamma = AsymptoticPoint::nearstandard(standard, infinitesimal, f.domain())?;
        let mut integrand = AsymptoticComplex::zero(order);
        for (g, d) in grad.iter().zip(delta.coords()) {
            integrand = integrand.add(&g.evaluate(&gamma)?.mul(&AsymptoticComplex::from_real(d.clone())));
        }
        acc = acc.add(&integrand.scaled(*w));
    }
    Ok(acc)
}
