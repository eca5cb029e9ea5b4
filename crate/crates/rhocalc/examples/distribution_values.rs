//! Distributions as pointwise objects: the Gaussian-kernel delta and step
//! models take values at nearstandard points, and can be multiplied.
//!
//! Run with `cargo run -p rhocalc --example distribution_values`.

use rhocalc::asymfunc::AsymptoticFunction;
use rhocalc::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
use rhocalc::lcfield::{AsymptoticScalar, Exponent};

fn main() -> rhocalc::Result<()> {
    let dom = DomainSpec::full(1);
    let order = Exponent::integer(10);
    let delta = AsymptoticFunction::embed_delta(dom.clone())?;
    let heaviside = AsymptoticFunction::embed_heaviside(dom.clone())?;

    let at = |x: f64| AsymptoticPoint::standard(vec![x], &dom, order);

    println!("delta(0)      = {}", delta.evaluate(&at(0.0)?)?);
    println!("delta(1)      = {}   (null: the kernel decays)", delta.evaluate(&at(1.0)?)?);
    println!("delta^2(0)    = {}", delta.mul(&delta).evaluate(&at(0.0)?)?);
    println!("(H*delta)(0)  = {}", heaviside.mul(&delta).evaluate(&at(0.0)?)?);
    println!("H(0)          = {}", heaviside.evaluate(&at(0.0)?)?);
    println!("H(-1)         = {}", heaviside.evaluate(&at(-1.0)?)?);
    println!("H(+1)         = {}", heaviside.evaluate(&at(1.0)?)?);

    // values through the infinitesimal microscope: delta along 0 + c*s
    println!();
    for c in [0.0, 0.5, 1.0, 2.0] {
        let h = AsymptoticVector::new(vec![AsymptoticScalar::monomial(
            c,
            Exponent::ONE,
            order,
        )]);
        let p = AsymptoticPoint::nearstandard(vec![0.0], h, &dom)?;
        println!("delta(0 + {c}*s) = {}", delta.evaluate(&p)?);
    }

    // the derivative of the step model evaluates like the delta model
    println!();
    let dh = heaviside.partial(0);
    println!("dH/dx as a tree: {}", dh.expr());
    let p = at(0.0)?;
    println!("dH/dx (0)     = {}", dh.evaluate(&p)?);
    println!("delta(0)      = {}", delta.evaluate(&p)?);
    Ok(())
}
