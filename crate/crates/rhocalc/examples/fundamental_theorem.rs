//! Scalars and the fundamental theorem: functions with null gradients are
//! constants, and gradient line integrals recover value differences, even
//! on a non-convex domain.
//!
//! Run with `cargo run -p rhocalc --example fundamental_theorem`.

use rhocalc::asymfunc::AsymptoticFunction;
use rhocalc::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
use rhocalc::calculus::{line_integral_gradient, scalar_detect};
use rhocalc::cli::parse_expr;
use rhocalc::lcfield::{AsymptoticScalar, Exponent};

fn main() -> rhocalc::Result<()> {
    let order = Exponent::integer(10);

    // sin^2 + cos^2 has a null gradient: it is the scalar 1
    let box1 = DomainSpec::interval(-2.0, 2.0);
    let pyth = AsymptoticFunction::new(parse_expr("sin(x)^2+cos(x)^2")?, box1.clone())?;
    let (report, witness) = scalar_detect(&pyth, 20, 3, 42)?;
    println!("sin^2+cos^2 on box(-2,2): {}", report.is_scalar);
    if let Some(c) = &report.constant {
        println!("  constant value C = {c}");
    }
    if let Some(w) = &witness {
        println!("  constant-function witness: {}", w.expr());
    }

    // x is not a scalar; the report carries gradient evidence
    let ident = AsymptoticFunction::new(parse_expr("x")?, box1)?;
    let (report, _) = scalar_detect(&ident, 20, 1, 42)?;
    println!();
    println!("x on box(-2,2): {}", report.is_scalar);
    if let Some(sample) = report.gradient_evidence.first() {
        println!("  gradient at {:?} is {}", sample.point, sample.gradient[0]);
    }

    // gradient line integral inside an annulus (arcwise connected but not
    // convex), with infinitesimal endpoint displacements
    let annulus = DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0);
    let f = AsymptoticFunction::new(parse_expr("x^2*y + y^3")?, annulus.clone())?;
    let h1 = AsymptoticVector::new(vec![
        AsymptoticScalar::monomial(0.3, Exponent::ONE, order),
        AsymptoticScalar::zero(order),
    ]);
    let h2 = AsymptoticVector::new(vec![
        AsymptoticScalar::zero(order),
        AsymptoticScalar::monomial(-0.5, Exponent::integer(2), order),
    ]);
    let p1 = AsymptoticPoint::nearstandard(vec![1.5, 0.2], h1, &annulus)?;
    let p2 = AsymptoticPoint::nearstandard(vec![1.2, 0.8], h2, &annulus)?;
    let integral = line_integral_gradient(&f, &p1, &p2, 4)?;
    let difference = f.evaluate(&p2)?.sub(&f.evaluate(&p1)?);
    println!();
    println!("annulus segment from (1.5+0.3s, 0.2) to (1.2, 0.8-0.5s^2):");
    println!("  integral of grad F . dxi = {integral}");
    println!("  F(p2) - F(p1)            = {difference}");
    println!("  max coefficient gap      = {:.3e}", integral.coeff_distance(&difference));
    Ok(())
}
