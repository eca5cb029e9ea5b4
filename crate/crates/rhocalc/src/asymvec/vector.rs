//! Vectors of asymptotic scalars with the Euclidean series norm.

use crate::error::{Error, Result};
use crate::lcfield::{
    AsymptoticScalar, Classification, Exponent, SeriesVerdict,
};
use std::fmt;

/// A d-tuple of series sharing one knowledge order.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticVector {
    coords: Vec<AsymptoticScalar>,
}

impl AsymptoticVector {
    /// Aligns all coordinates to the smallest order among them.
    pub fn new(coords: Vec<AsymptoticScalar>) -> Self {
        assert!(!coords.is_empty(), "vectors have at least one coordinate");
        let order = coords.iter().map(|c| c.order()).min().expect("nonempty");
        AsymptoticVector { coords: coords.iter().map(|c| c.truncate(order)).collect() }
    }

    pub fn zero(d: usize, order: Exponent) -> Self {
        Self::new(vec![AsymptoticScalar::zero(order); d])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn order(&self) -> Exponent {
        self.coords[0].order()
    }

    pub fn coords(&self) -> &[AsymptoticScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &AsymptoticScalar {
        &self.coords[i]
    }

    pub fn is_null(&self) -> bool {
        self.coords.iter().all(AsymptoticScalar::is_null)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(self.coords.iter().map(|c| c.scaled(k)).collect())
    }

    pub fn mul_scalar(&self, a: &AsymptoticScalar) -> Self {
        Self::new(self.coords.iter().map(|c| c.mul(a)).collect())
    }

    /// Euclidean norm `sqrt(sum of squares)`; the null series (at half the
    /// squared order) when every coordinate is null. For d = 1 this is the
    /// exact absolute value.
    pub fn norm(&self) -> AsymptoticScalar {
        if self.coords.len() == 1 {
            let c = &self.coords[0];
            return match c.leading() {
                Some((_, lead)) if lead < 0.0 => c.neg(),
                _ => c.clone(),
            };
        }
        let mut sum = AsymptoticScalar::zero(self.order().mul_int(2));
        for c in &self.coords {
            sum = sum.add(&c.mul(c));
        }
        if sum.is_null() {
            // all coordinates null at N: the norm is null at N, not 2N
            return crate::lcfield::null_sqrt(&sum);
        }
        sum.sqrt_positive().expect("sum of squares has positive leading coefficient")
    }

    pub fn classify(&self) -> Classification {
        self.norm().classify()
    }

    /// Membership in the neighborhood-base ball `B_n = { ||x|| < s^n }`.
    pub fn in_ball(&self, n: u32) -> SeriesVerdict {
        self.norm().strictly_below_scale_pow(Exponent::integer(n as i64))
    }

    /// The smallest ball index the vector certainly lies in, judged by the
    /// valuation of its norm (the grading used by the limit checkers).
    pub fn norm_valuation(&self) -> Exponent {
        self.norm().valuation()
    }

    /// Re-stamps the knowledge order of exact coordinate data.
    pub(crate) fn with_order(&self, order: Exponent) -> Self {
        Self::new(self.coords.iter().map(|c| c.with_order(order)).collect())
    }

    /// All coordinates infinitesimal (or null); the failing coordinate
    /// otherwise.
    pub fn require_infinitesimal(&self) -> Result<()> {
        for (i, c) in self.coords.iter().enumerate() {
            if let Some(v) = c.valuation_opt() {
                if !v.is_positive() {
                    return Err(Error::NotInfinitesimal { coord: i, valuation: v });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for AsymptoticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
