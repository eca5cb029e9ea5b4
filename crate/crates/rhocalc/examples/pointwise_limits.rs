//! Limits through the interval topology: continuity and differentiability
//! as finite quantifier searches with witness tables.
//!
//! Run with `cargo run -p rhocalc --example pointwise_limits`.

use rhocalc::asymfunc::{AsymptoticFunction, Expr};
use rhocalc::asymvec::{AsymptoticPoint, DomainSpec};
use rhocalc::calculus::{
    continuity_check, derivative_quotient, differentiability_check, standard_probes,
};
use rhocalc::lcfield::{AsymptoticScalar, Exponent};

fn main() -> rhocalc::Result<()> {
    let dom = DomainSpec::full(1);
    let order = Exponent::integer(10);
    let n_max = 5;
    let probes = standard_probes(1, n_max, order);

    let square = AsymptoticFunction::new(Expr::pow(Expr::var(0), Exponent::integer(2)), dom.clone())?;
    let delta = AsymptoticFunction::embed_delta(dom.clone())?;

    for (name, f, x) in [("x^2", &square, 3.0), ("delta", &delta, 0.0)] {
        let p = AsymptoticPoint::standard(vec![x], &dom, order)?;
        let cont = continuity_check(f, &p, n_max, &probes, 42)?;
        let diff = differentiability_check(f, &p, n_max, &probes, 42)?;
        println!("{name} at x = {x}");
        println!("  continuity:       {}", cont.verdict);
        for w in &cont.witnesses {
            println!("    target s^{}: probes inside B_{} suffice", w.n, w.m);
        }
        println!("  differentiability: {}", diff.verdict);
        for w in &diff.witnesses {
            println!("    target s^{}: probes inside B_{} suffice", w.n, w.m);
        }
        println!();
    }

    // the difference quotient approaches the derivative as the step shrinks
    let p = AsymptoticPoint::standard(vec![3.0], &dom, order)?;
    let derivative = square.partial(0).evaluate(&p)?;
    println!("(x^2)'(3) = {derivative}");
    for v in 1..=3 {
        let h = AsymptoticScalar::monomial(1.0, Exponent::integer(v), order);
        let q = derivative_quotient(&square, &p, &h)?;
        println!("  quotient with h = s^{v}: {q}");
    }
    Ok(())
}
