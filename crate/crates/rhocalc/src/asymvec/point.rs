//! Nearstandard points: a standard point of the domain plus an
//! infinitesimal displacement.
//!
//! The standard part is stored separately from the series so membership in
//! the domain never depends on coefficient thresholding.

use super::domain::DomainSpec;
use super::vector::AsymptoticVector;
use crate::error::{Error, Result};
use crate::lcfield::{AsymptoticScalar, Exponent};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticPoint {
    standard: Vec<f64>,
    infinitesimal: AsymptoticVector,
}

impl AsymptoticPoint {
    /// `x + h` with `x` in the domain and `h` infinitesimal (or null).
    pub fn nearstandard(
        standard: Vec<f64>,
        infinitesimal: AsymptoticVector,
        dom: &DomainSpec,
    ) -> Result<Self> {
        if standard.len() != dom.dim() || !dom.contains(&standard) {
            return Err(Error::OutsideDomain(standard));
        }
        if standard.len() != infinitesimal.dim() {
            return Err(Error::InvalidArgument(format!(
                "point dimension {} does not match displacement dimension {}",
                standard.len(),
                infinitesimal.dim()
            )));
        }
        infinitesimal.require_infinitesimal()?;
        Ok(AsymptoticPoint { standard, infinitesimal })
    }

    /// A standard point of the domain (`h = 0`).
    pub fn standard(standard: Vec<f64>, dom: &DomainSpec, order: Exponent) -> Result<Self> {
        let h = AsymptoticVector::zero(standard.len(), order);
        Self::nearstandard(standard, h, dom)
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn order(&self) -> Exponent {
        self.infinitesimal.order()
    }

    pub fn standard_part(&self) -> &[f64] {
        &self.standard
    }

    pub fn infinitesimal_part(&self) -> &AsymptoticVector {
        &self.infinitesimal
    }

    /// The i-th coordinate as a single series, standard part at exponent 0.
    pub fn coordinate(&self, i: usize) -> AsymptoticScalar {
        AsymptoticScalar::constant(self.standard[i], self.order()).add(self.infinitesimal.coord(i))
    }

    /// Re-stamps the knowledge order of the stored (exact) displacement
    /// series, so checks can work at a deeper horizon than the point was
    /// built with.
    pub(crate) fn with_order(&self, order: Exponent) -> Self {
        let coords = self
            .infinitesimal
            .coords()
            .iter()
            .map(|c| c.with_order(order))
            .collect();
        AsymptoticPoint {
            standard: self.standard.clone(),
            infinitesimal: AsymptoticVector::new(coords),
        }
    }

    /// Displaces the infinitesimal part; the standard part is untouched, so
    /// membership is preserved.
    pub fn displaced(&self, h: &AsymptoticVector) -> Result<Self> {
        h.require_infinitesimal()?;
        Ok(AsymptoticPoint {
            standard: self.standard.clone(),
            infinitesimal: self.infinitesimal.add(h),
        })
    }

    /// Full series difference `self - other`, standard parts included.
    pub fn series_delta(&self, other: &AsymptoticPoint) -> AsymptoticVector {
        assert_eq!(self.dim(), other.dim());
        AsymptoticVector::new(
            (0..self.dim())
                .map(|i| self.coordinate(i).sub(&other.coordinate(i)))
                .collect(),
        )
    }
}

/// JSON form of a point: a `standard` array plus one embedded series per
/// coordinate, `{"standard":[..],"infinitesimal":[<series>..]}`.
pub fn point_to_json(p: &AsymptoticPoint) -> String {
    use std::fmt::Write as _;
    let mut out = String::from("{\"standard\":[");
    for (i, x) in p.standard_part().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{x:.16e}").expect("writing to String cannot fail");
    }
    out.push_str("],\"infinitesimal\":[");
    for (i, c) in p.infinitesimal_part().coords().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&crate::lcfield::scalar_to_json(c));
    }
    out.push_str("]}");
    out
}

pub fn point_from_json(src: &str, dom: &DomainSpec) -> Result<AsymptoticPoint> {
    let v: serde_json::Value = serde_json::from_str(src)
        .map_err(|e| Error::InvalidArgument(format!("malformed point JSON: {e}")))?;
    let standard: Vec<f64> = v
        .get("standard")
        .and_then(|a| a.as_array())
        .ok_or_else(|| Error::InvalidArgument("point JSON needs a \"standard\" array".into()))?
        .iter()
        .map(|x| x.as_f64())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidArgument("non-numeric standard coordinate".into()))?;
    let coords = v
        .get("infinitesimal")
        .and_then(|a| a.as_array())
        .ok_or_else(|| {
            Error::InvalidArgument("point JSON needs an \"infinitesimal\" array".into())
        })?
        .iter()
        .map(|c| crate::lcfield::scalar_from_json(&c.to_string()))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != standard.len() {
        return Err(Error::InvalidArgument(
            "standard and infinitesimal arrays must have the same length".into(),
        ));
    }
    AsymptoticPoint::nearstandard(standard, AsymptoticVector::new(coords), dom)
}

impl fmt::Display for AsymptoticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.coordinate(i))?;
        }
        Ok(())
    }
}
