//! Arithmetic in the truncated Levi-Civita model: the scale `s`, inverses,
//! roots, ordering and classification.
//!
//! Run with `cargo run -p rhocalc --example series_arithmetic`.

use rhocalc::lcfield::{scalar_to_json, AsymptoticScalar, Comparison, Exponent};

fn main() -> rhocalc::Result<()> {
    let order = Exponent::integer(10);
    let s = AsymptoticScalar::scale_pow(Exponent::ONE, order);

    println!("the scale itself:            s = {s}");
    println!("it squares to:             s^2 = {}", s.mul(&s));

    // geometric series: 1 / (1 - s)
    let one_minus_s = AsymptoticScalar::constant(1.0, order).sub(&s);
    let geo = one_minus_s.inv()?;
    println!("1/(1-s)                        = {geo}");
    println!("multiplied back:               = {}", one_minus_s.mul(&geo));

    // binomial series: sqrt(1 + s)
    let sq = AsymptoticScalar::constant(1.0, order).add(&s).sqrt_positive()?;
    println!("sqrt(1+s)                      = {sq}");
    println!("squared back:                  = {}", sq.mul(&sq));

    // the scale is a positive infinitesimal: 0 < s < 1/k for every k
    println!();
    let zero = AsymptoticScalar::zero(order);
    println!("compare(0, s)      -> {:?}", zero.compare(&s));
    for k in [10.0, 1e3, 1e6] {
        let r = AsymptoticScalar::constant(1.0 / k, order);
        assert_eq!(s.compare(&r), Comparison::Less);
    }
    println!("s < 1/k for k up to 10^6 (non-archimedean)");

    // classification by valuation
    let big = AsymptoticScalar::monomial(1.0, Exponent::new(-1, 2)?, order);
    println!();
    println!("classify(s)        -> {:?}", s.classify());
    println!("classify(1 + s)    -> {:?}", AsymptoticScalar::constant(1.0, order).add(&s).classify());
    println!("classify(s^(-1/2)) -> {:?}", big.classify());
    println!("classify(0)        -> {:?}", zero.classify());

    // order propagation: knowledge shrinks through products with negative
    // valuation
    let a = AsymptoticScalar::monomial(1.0, Exponent::integer(-1), Exponent::integer(5));
    let b = AsymptoticScalar::monomial(1.0, Exponent::integer(2), Exponent::integer(5));
    println!();
    println!("s^-1 (known to order 5) * s^2 (known to order 5) = {}", a.mul(&b));

    // the wire format round-trips bit-exactly
    println!();
    println!("JSON form of sqrt(1+s): {}", scalar_to_json(&sq));
    Ok(())
}
