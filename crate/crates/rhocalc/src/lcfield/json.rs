//! JSON series format:
//! `{"terms":[{"exp":[num,den],"re":...,"im":...}],"order":[num,den]}`.
//!
//! Doubles are written with 17 significant digits so the round trip is
//! bit-exact; exponents are reduced integer pairs.

use super::complex::AsymptoticComplex;
use super::exponent::Exponent;
use super::scalar::AsymptoticScalar;
use crate::error::{Error, Result};
use serde_json::Value;
use std::fmt::Write as _;

pub fn complex_to_json(z: &AsymptoticComplex) -> String {
    let mut exps: Vec<Exponent> = z
        .re()
        .terms()
        .iter()
        .chain(z.im().terms().iter())
        .map(|t| t.0)
        .collect();
    exps.sort();
    exps.dedup();
    let mut out = String::from("{\"terms\":[");
    for (i, e) in exps.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(
            out,
            "{{\"exp\":[{},{}],\"re\":{:.16e},\"im\":{:.16e}}}",
            e.num(),
            e.den(),
            z.re().coeff_at(*e),
            z.im().coeff_at(*e),
        )
        .expect("writing to String cannot fail");
    }
    write!(out, "],\"order\":[{},{}]}}", z.order().num(), z.order().den())
        .expect("writing to String cannot fail");
    out
}

pub fn scalar_to_json(a: &AsymptoticScalar) -> String {
    complex_to_json(&AsymptoticComplex::from_real(a.clone()))
}

pub fn complex_from_json(src: &str) -> Result<AsymptoticComplex> {
    let v: Value = serde_json::from_str(src)
        .map_err(|e| Error::InvalidArgument(format!("malformed series JSON: {e}")))?;
    let order = exponent_from_value(
        v.get("order").ok_or_else(|| bad("missing \"order\""))?,
    )?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut re = Vec::with_capacity(terms.len());
    let mut im = Vec::with_capacity(terms.len());
    for t in terms {
        let e = exponent_from_value(t.get("exp").ok_or_else(|| bad("term without \"exp\""))?)?;
        re.push((e, number(t, "re")?));
        im.push((e, number(t, "im")?));
    }
    Ok(AsymptoticComplex::new(
        AsymptoticScalar::normalize(re, order),
        AsymptoticScalar::normalize(im, order),
    ))
}

pub fn scalar_from_json(src: &str) -> Result<AsymptoticScalar> {
    let z = complex_from_json(src)?;
    if !z.is_real() {
        return Err(Error::InvalidArgument("expected a real series".into()));
    }
    Ok(z.re().clone())
}

fn bad(msg: &str) -> Error {
    Error::InvalidArgument(format!("malformed series JSON: {msg}"))
}

fn number(t: &Value, key: &str) -> Result<f64> {
    t.get(key)
        .and_then(Value::as_f64)
        .ok_or_else(|| bad(&format!("term without numeric \"{key}\"")))
}

fn exponent_from_value(v: &Value) -> Result<Exponent> {
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("exponent must be [num,den]"))?;
    let num = arr[0].as_i64().ok_or_else(|| bad("exponent numerator"))?;
    let den = arr[1].as_i64().ok_or_else(|| bad("exponent denominator"))?;
    Exponent::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let a = AsymptoticScalar::normalize(
            vec![
                (Exponent::integer(-1), 1.0 / 3.0),
                (Exponent::new(1, 2).unwrap(), std::f64::consts::PI),
                (Exponent::integer(3), -2.5e-9),
            ],
            Exponent::integer(10),
        );
        let z = AsymptoticComplex::new(a.clone(), a.scaled(0.127));
        let text = complex_to_json(&z);
        let back = complex_from_json(&text).unwrap();
        assert_eq!(z, back);
        // and the re-serialization is byte-identical
        assert_eq!(text, complex_to_json(&back));
    }
}
