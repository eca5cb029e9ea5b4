//! Truncated Levi-Civita series over the scale `s`: the computable model of
//! the real asymptotic numbers.
//!
//! A value is a finite sum `sum c_i * s^(q_i)` with rational exponents,
//! strictly increasing, all below the knowledge order `N`. Everything at or
//! beyond `N` is unknown; a series with no stored terms is "null at order".

use super::exponent::Exponent;
use super::primitive::PrimitiveId;
use super::verdict::{Classification, Comparison, SeriesVerdict};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Coefficients with absolute value below this threshold are treated as
/// accumulated float noise and dropped during normalization.
pub const TAU: f64 = 1e-12;

/// Default knowledge order for convenience constructors.
pub const DEFAULT_ORDER: i64 = 10;

pub fn default_order() -> Exponent {
    Exponent::integer(DEFAULT_ORDER)
}

/// A truncated real Levi-Civita series with a knowledge order.
#[derive(Clone, PartialEq)]
pub struct AsymptoticScalar {
    terms: Vec<(Exponent, f64)>,
    order: Exponent,
}

impl AsymptoticScalar {
    /// Quotient-map analogue: merges duplicate exponents, discards terms at
    /// or beyond the order, and drops sub-threshold coefficients.
    pub fn normalize(raw: Vec<(Exponent, f64)>, order: Exponent) -> Self {
        let mut acc: BTreeMap<Exponent, f64> = BTreeMap::new();
        for (e, c) in raw {
            if e < order {
                *acc.entry(e).or_insert(0.0) += c;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| c.abs() >= TAU && c.is_finite()).collect();
        AsymptoticScalar { terms, order }
    }

    pub fn zero(order: Exponent) -> Self {
        AsymptoticScalar { terms: Vec::new(), order }
    }

    pub fn constant(c: f64, order: Exponent) -> Self {
        Self::normalize(vec![(Exponent::ZERO, c)], order)
    }

    /// The standard real `c` at the default order.
    pub fn real(c: f64) -> Self {
        Self::constant(c, default_order())
    }

    /// A single term `c * s^q`.
    pub fn monomial(c: f64, q: Exponent, order: Exponent) -> Self {
        Self::normalize(vec![(q, c)], order)
    }

    /// The scale itself, `s`, at the default order.
    pub fn scale() -> Self {
        Self::monomial(1.0, Exponent::ONE, default_order())
    }

    /// `s^q` at the given order.
    pub fn scale_pow(q: Exponent, order: Exponent) -> Self {
        Self::monomial(1.0, q, order)
    }

    pub fn terms(&self) -> &[(Exponent, f64)] {
        &self.terms
    }

    pub fn order(&self) -> Exponent {
        self.order
    }

    pub fn is_null(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Exponent, f64)> {
        self.terms.first().copied()
    }

    pub fn coeff_at(&self, q: Exponent) -> f64 {
        self.terms
            .iter()
            .find(|(e, _)| *e == q)
            .map(|(_, c)| *c)
            .unwrap_or(0.0)
    }

    /// Coefficient at exponent zero (0 when absent).
    pub fn standard_part(&self) -> f64 {
        self.coeff_at(Exponent::ZERO)
    }

    /// Least stored exponent, or the order itself as the null marker.
    pub fn valuation(&self) -> Exponent {
        self.leading().map(|(e, _)| e).unwrap_or(self.order)
    }

    pub fn valuation_opt(&self) -> Option<Exponent> {
        self.leading().map(|(e, _)| e)
    }

    pub fn classify(&self) -> Classification {
        match self.valuation_opt() {
            None => Classification::NullAtOrder,
            Some(v) if v.is_negative() => Classification::InfinitelyLarge,
            Some(v) if v == Exponent::ZERO => Classification::FiniteAppreciable,
            Some(_) => Classification::Infinitesimal,
        }
    }

    /// Restricts knowledge to `new_order` (a no-op if already coarser).
    pub fn truncate(&self, new_order: Exponent) -> Self {
        if new_order >= self.order {
            return self.clone();
        }
        let terms = self.terms.iter().filter(|(e, _)| *e < new_order).copied().collect();
        AsymptoticScalar { terms, order: new_order }
    }

    /// Re-stamps the order of a series whose stored terms are known to be
    /// exact (used when literals enter an evaluation at a wider working
    /// order).
    pub(crate) fn with_order(&self, order: Exponent) -> Self {
        Self::normalize(self.terms.clone(), order)
    }

    pub fn neg(&self) -> Self {
        AsymptoticScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            order: self.order,
        }
    }

    pub fn scaled(&self, k: f64) -> Self {
        let raw = self.terms.iter().map(|(e, c)| (*e, c * k)).collect();
        Self::normalize(raw, self.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut raw = Vec::with_capacity(self.terms.len() + other.terms.len());
        raw.extend_from_slice(&self.terms);
        raw.extend_from_slice(&other.terms);
        Self::normalize(raw, order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product. The result order is
    /// `min(a.order + val(b), b.order + val(a))` with the valuation of a
    /// null operand counting as its order; this is the tightest horizon the
    /// unknown tails of the operands allow.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order + other.valuation()).min(other.order + self.valuation());
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((*ea + *eb, ca * cb));
            }
        }
        Self::normalize(raw, order)
    }

    /// Shifts every exponent by `q` and rescales, without changing relative
    /// knowledge: `c * s^q * self` with the order moved along.
    fn shift_scale(&self, q: Exponent, c: f64) -> Self {
        let raw = self.terms.iter().map(|(e, k)| (*e + q, k * c)).collect();
        Self::normalize(raw, self.order + q)
    }

    /// The factor `u` in `a = c s^q (1 + u)`, returned at the relative
    /// horizon `order - q`, together with `(q, c)`.
    fn split_leading(&self) -> Option<(Exponent, f64, AsymptoticScalar)> {
        let (q, c) = self.leading()?;
        let raw = self.terms[1..].iter().map(|(e, k)| (*e - q, k / c)).collect();
        Some((q, c, Self::normalize(raw, self.order - q)))
    }

    /// Field inverse: `a = c s^q (1 + u)` maps to
    /// `c^-1 s^-q sum_k (-u)^k`, truncated so that `a * inv(a) == 1`
    /// modulo the product order.
    pub fn inv(&self) -> Result<Self> {
        let (q, c, u) = self
            .split_leading()
            .ok_or(Error::NullDivision { order: self.order })?;
        let horizon = self.order - q;
        // Horner form of the geometric series: acc <- 1 - u * acc.
        let one = Self::constant(1.0, horizon);
        let mut acc = one.clone();
        for _ in 0..geometric_steps(&u, horizon) {
            acc = one.sub(&u.mul(&acc).truncate(horizon));
        }
        Ok(acc.shift_scale(-q, 1.0 / c))
    }

    /// Square root of a series with positive leading coefficient.
    pub fn sqrt_positive(&self) -> Result<Self> {
        self.pow_rational(Exponent::new(1, 2).expect("1/2 is valid"))
    }

    /// Rational power. Integer exponents are exact powers (any sign of the
    /// leading coefficient, negative exponents via the inverse); fractional
    /// exponents require a strictly positive leading coefficient and use the
    /// binomial series on `a = c s^q (1 + u)`.
    pub fn pow_rational(&self, t: Exponent) -> Result<Self> {
        if t.is_integer() {
            return self.int_pow(t.num());
        }
        let (q, c, u) = self.split_leading().ok_or(Error::NotPositive)?;
        if c <= 0.0 {
            return Err(Error::NotPositive);
        }
        let horizon = self.order - q;
        let steps = geometric_steps(&u, horizon);
        // binom(t, k) by the descending-factor recurrence.
        let mut coeffs = Vec::with_capacity(steps + 1);
        let mut b = 1.0;
        let tf = t.as_f64();
        for k in 0..=steps {
            coeffs.push(b);
            b *= (tf - k as f64) / (k as f64 + 1.0);
        }
        let mut acc = Self::constant(*coeffs.last().unwrap(), horizon);
        for k in (0..coeffs.len() - 1).rev() {
            acc = Self::constant(coeffs[k], horizon).add(&u.mul(&acc).truncate(horizon));
        }
        let lead = q.checked_mul(&t)?;
        Ok(acc.shift_scale(lead, c.powf(tf)))
    }

    /// Exact integer power via repeated products.
    pub fn int_pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.int_pow(-k);
        }
        let mut acc = Self::constant(1.0, self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Total-order comparison: the sign of the leading coefficient of
    /// `b - a` decides; no stored difference means the order cannot tell.
    pub fn compare(&self, other: &Self) -> Comparison {
        match other.sub(self).leading() {
            None => Comparison::IndistinguishableAtOrder,
            Some((_, c)) if c > 0.0 => Comparison::Less,
            Some(_) => Comparison::Greater,
        }
    }

    /// Whether `self < s^n` strictly, as far as the order can tell. Series
    /// that coincide with `s^n` at order are reported as `Fails` (not
    /// strictly less); a null series against an out-of-horizon bound is
    /// genuinely undecidable.
    pub fn strictly_below_scale_pow(&self, n: Exponent) -> SeriesVerdict {
        let bound = Self::scale_pow(n, self.order);
        match (self.is_null(), bound.sub(self).leading()) {
            (_, Some((_, c))) if c > 0.0 => SeriesVerdict::Holds,
            (_, Some(_)) => SeriesVerdict::Fails,
            (true, None) => SeriesVerdict::IndistinguishableAtOrder,
            (false, None) => SeriesVerdict::Fails,
        }
    }

    /// Taylor lifting of a smooth primitive around the standard part of a
    /// finite argument; infinitely large arguments are resolved by the
    /// primitive's infinite-argument rule.
    pub fn lift_analytic(&self, p: PrimitiveId) -> Result<Self> {
        if let PrimitiveId::Poly(k) = p {
            return self.int_pow(k as i64);
        }
        if let Some(v) = self.valuation_opt() {
            if v.is_negative() {
                let (_, lead) = self.leading().expect("nonnull");
                return p.infinite_limit(lead > 0.0, self.order);
            }
        }
        let center = self.standard_part();
        if let Some(msg) = p.domain_violation(center) {
            return Err(Error::Domain(msg));
        }
        let displaced = {
            let raw = self
                .terms
                .iter()
                .filter(|(e, _)| *e != Exponent::ZERO)
                .copied()
                .collect();
            Self::normalize(raw, self.order)
        };
        let steps = geometric_steps(&displaced, self.order);
        let coeffs: Vec<f64> = p.taylor_coeffs(center).take(steps + 1).collect();
        let mut acc = Self::constant(*coeffs.last().unwrap(), self.order);
        for k in (0..coeffs.len() - 1).rev() {
            acc = Self::constant(coeffs[k], self.order)
                .add(&displaced.mul(&acc).truncate(self.order));
        }
        Ok(acc)
    }

    /// Partial-sum evaluation at a concrete positive value of the scale.
    pub fn eval_at_rho(&self, rho: f64) -> f64 {
        self.terms.iter().map(|(e, c)| c * rho.powf(e.as_f64())).sum()
    }

    /// Largest coefficient gap against `other` over the union of stored
    /// exponents, after truncating both to the common order.
    pub fn coeff_distance(&self, other: &Self) -> f64 {
        let order = self.order.min(other.order);
        let a = self.truncate(order);
        let b = other.truncate(order);
        let mut exps: Vec<Exponent> = a.terms.iter().chain(b.terms.iter()).map(|t| t.0).collect();
        exps.sort();
        exps.dedup();
        exps.into_iter()
            .map(|e| (a.coeff_at(e) - b.coeff_at(e)).abs())
            .fold(0.0, f64::max)
    }
}

/// Number of Horner steps needed so that the discarded tail of a power
/// series in `u` lies at or beyond `horizon`: minimal `K` with
/// `(K+1) * val(u) >= horizon`.
fn geometric_steps(u: &AsymptoticScalar, horizon: Exponent) -> usize {
    match u.valuation_opt() {
        None => 0,
        Some(v) => {
            debug_assert!(v.is_positive(), "factor must be infinitesimal");
            if !horizon.is_positive() {
                return 0;
            }
            (horizon.div_ceil(&v).max(1) - 1) as usize
        }
    }
}

impl fmt::Debug for AsymptoticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AsymptoticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *e == Exponent::ZERO {
                write!(f, "{c:.16e}")?;
            } else if e.is_integer() {
                write!(f, "{c:.16e}*s^{}", e.num())?;
            } else {
                write!(f, "{c:.16e}*s^({e})")?;
            }
        }
        if !self.terms.is_empty() {
            write!(f, " + ")?;
        }
        if self.order.is_integer() {
            write!(f, "O(s^{})", self.order.num())
        } else {
            write!(f, "O(s^({}))", self.order)
        }
    }
}
