//! Complex asymptotic numbers as pairs of real series with a shared order.

use super::exponent::Exponent;
use super::scalar::AsymptoticScalar;
use super::verdict::Classification;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticComplex {
    re: AsymptoticScalar,
    im: AsymptoticScalar,
}

impl AsymptoticComplex {
    /// Pairs two real series, truncating both to the common order.
    pub fn new(re: AsymptoticScalar, im: AsymptoticScalar) -> Self {
        let order = re.order().min(im.order());
        AsymptoticComplex { re: re.truncate(order), im: im.truncate(order) }
    }

    pub fn from_real(re: AsymptoticScalar) -> Self {
        let im = AsymptoticScalar::zero(re.order());
        AsymptoticComplex { re, im }
    }

    pub fn constant(re: f64, im: f64, order: Exponent) -> Self {
        AsymptoticComplex {
            re: AsymptoticScalar::constant(re, order),
            im: AsymptoticScalar::constant(im, order),
        }
    }

    pub fn zero(order: Exponent) -> Self {
        AsymptoticComplex { re: AsymptoticScalar::zero(order), im: AsymptoticScalar::zero(order) }
    }

    pub fn re(&self) -> &AsymptoticScalar {
        &self.re
    }

    pub fn im(&self) -> &AsymptoticScalar {
        &self.im
    }

    pub fn order(&self) -> Exponent {
        self.re.order()
    }

    pub fn is_null(&self) -> bool {
        self.re.is_null() && self.im.is_null()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_null()
    }

    /// Least stored exponent across both components; the common order when
    /// null. Coincides with the valuation of the modulus.
    pub fn valuation(&self) -> Exponent {
        self.re.valuation().min(self.im.valuation())
    }

    pub fn valuation_opt(&self) -> Option<Exponent> {
        match (self.re.valuation_opt(), self.im.valuation_opt()) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(self.order()).min(b.unwrap_or(self.order()))),
        }
    }

    pub fn classify(&self) -> Classification {
        match self.valuation_opt() {
            None => Classification::NullAtOrder,
            Some(v) if v.is_negative() => Classification::InfinitelyLarge,
            Some(v) if v == Exponent::ZERO => Classification::FiniteAppreciable,
            Some(_) => Classification::Infinitesimal,
        }
    }

    pub fn truncate(&self, order: Exponent) -> Self {
        AsymptoticComplex { re: self.re.truncate(order), im: self.im.truncate(order) }
    }

    pub fn neg(&self) -> Self {
        AsymptoticComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        AsymptoticComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Self::new(re, im)
    }

    pub fn scaled(&self, k: f64) -> Self {
        AsymptoticComplex { re: self.re.scaled(k), im: self.im.scaled(k) }
    }

    /// `1/z = conj(z) / |z|^2`.
    pub fn inv(&self) -> Result<Self> {
        let msq = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let inv_msq = msq.inv().map_err(|_| Error::NullDivision { order: self.order() })?;
        let inv_msq = AsymptoticComplex::from_real(inv_msq);
        Ok(self.conj().mul(&inv_msq))
    }

    pub fn int_pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.int_pow(-k);
        }
        let mut acc = Self::constant(1.0, 0.0, self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Modulus: `sqrt(re^2 + im^2)`, with real arguments shortcut to the
    /// exact absolute value and null arguments mapped to the null series at
    /// half the squared order.
    pub fn abs(&self) -> AsymptoticScalar {
        if self.im.is_null() {
            return match self.re.leading() {
                Some((_, c)) if c < 0.0 => self.re.neg(),
                _ => self.re.clone(),
            };
        }
        if self.re.is_null() {
            return match self.im.leading() {
                Some((_, c)) if c < 0.0 => self.im.neg(),
                _ => self.im.clone(),
            };
        }
        let msq = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        if msq.is_null() {
            return null_sqrt(&msq);
        }
        msq.sqrt_positive().expect("sum of squares has a positive leading coefficient")
    }

    /// Largest coefficient gap against `other` over both components.
    pub fn coeff_distance(&self, other: &Self) -> f64 {
        self.re.coeff_distance(&other.re).max(self.im.coeff_distance(&other.im))
    }
}

/// Square root of a null series: still null, at half the order.
pub(crate) fn null_sqrt(a: &AsymptoticScalar) -> AsymptoticScalar {
    debug_assert!(a.is_null());
    let halved = Exponent::reduced(a.order().num(), a.order().den() * 2);
    AsymptoticScalar::zero(halved)
}

impl fmt::Display for AsymptoticComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_null() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + i*({})", self.re, self.im)
        }
    }
}
