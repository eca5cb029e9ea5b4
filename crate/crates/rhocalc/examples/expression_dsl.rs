//! The expression DSL: parsing, pretty-printing, point literals, and
//! symbolic differentiation from source text.
//!
//! Run with `cargo run -p rhocalc --example expression_dsl`.

use rhocalc::asymfunc::AsymptoticFunction;
use rhocalc::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
use rhocalc::cli::{parse_domain, parse_expr, parse_point};
use rhocalc::lcfield::Exponent;

fn main() -> rhocalc::Result<()> {
    let order = Exponent::integer(10);

    // parse, print, parse again: the printed form is valid source
    for src in ["sin(x)^2+cos(x)^2", "delta(x)^2", "1/(1-s)", "sqrt(1+s)", "exp(x*s^(1/2))"] {
        let tree = parse_expr(src)?;
        println!("{src:<22} parses to  {tree}");
        parse_expr(&tree.to_string())?;
    }

    // bare fractional exponents are rejected with a hint
    println!();
    match parse_expr("exp(x)+s^1/2") {
        Err(e) => println!("exp(x)+s^1/2 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    // point literals: per-coordinate standard part plus a series in s
    let dom = parse_domain("box(-2,2;-2,2)")?;
    let bindings = parse_point("x=0.5+1*s^2, y=-1", order)?;
    let mut standard = vec![0.0; 2];
    let mut inf = vec![rhocalc::lcfield::AsymptoticScalar::zero(order); 2];
    for (i, value) in bindings {
        standard[i] = value.standard_part();
        inf[i] = value.sub(&rhocalc::lcfield::AsymptoticScalar::constant(
            value.standard_part(),
            order,
        ));
    }
    let p = AsymptoticPoint::nearstandard(standard, AsymptoticVector::new(inf), &dom)?;
    println!();
    println!("point literal `x=0.5+1*s^2, y=-1` is ({p})");

    // evaluate and differentiate a parsed expression at that point
    let f = AsymptoticFunction::new(parse_expr("x^2*y + exp(y)")?, dom)?;
    println!("F = {}", f.expr());
    println!("F(p)        = {}", f.evaluate(&p)?);
    println!("dF/dx       = {}", f.partial(0).expr());
    println!("dF/dx (p)   = {}", f.partial(0).evaluate(&p)?);
    println!("dF/dy       = {}", f.partial(1).expr());
    println!("dF/dy (p)   = {}", f.partial(1).evaluate(&p)?);

    // the delta kernel desugars to scale-powered Gaussians
    println!();
    let d = parse_expr("delta(x)")?;
    println!("delta(x) desugars to {d}");
    let f = AsymptoticFunction::new(d, DomainSpec::full(1))?;
    let origin = AsymptoticPoint::standard(vec![0.0], &DomainSpec::full(1), order)?;
    println!("its value at 0 is {}", f.evaluate(&origin)?);
    Ok(())
}
