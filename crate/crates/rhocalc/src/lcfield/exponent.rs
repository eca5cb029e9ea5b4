//! Rational exponents of the series scale `s`.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced fraction `num/den` with `den >= 1`, used both for term
/// exponents and for knowledge orders.
///
/// Denominators are capped at [`Exponent::MAX_DENOMINATOR`] wherever a new
/// denominator enters the system (construction, parsing, root-taking);
/// sums of already-valid exponents are reduced but not re-checked.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: i64,
    den: i64,
}

impl Exponent {
    /// Largest denominator accepted from user input and root operations.
    pub const MAX_DENOMINATOR: i64 = 64;

    pub const ZERO: Exponent = Exponent { num: 0, den: 1 };
    pub const ONE: Exponent = Exponent { num: 1, den: 1 };

    /// Builds the reduced fraction `num/den`, rejecting denominators that
    /// reduce to something above the cap.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("exponent denominator is zero".into()));
        }
        let e = Self::reduced(num, den);
        if e.den > Self::MAX_DENOMINATOR {
            return Err(Error::DenominatorLimit(e.den));
        }
        Ok(e)
    }

    pub(crate) fn reduced(num: i64, den: i64) -> Self {
        debug_assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Exponent { num: sign * num / g, den: den.abs() / g }
    }

    pub fn integer(n: i64) -> Self {
        Exponent { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// Halves the exponent, as needed by square roots.
    pub fn halved(&self) -> Result<Self> {
        Self::new(self.num, self.den.checked_mul(2).ok_or(Error::DenominatorLimit(i64::MAX))?)
    }

    /// Multiplies two exponents (used by rational powers of a leading
    /// factor), re-checking the denominator cap.
    pub fn checked_mul(&self, other: &Exponent) -> Result<Self> {
        Self::new(self.num * other.num, self.den * other.den)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::reduced(self.num * k, self.den)
    }

    /// `ceil(self / other)` for a strictly positive `other`.
    pub(crate) fn div_ceil(&self, other: &Exponent) -> i64 {
        debug_assert!(other.num > 0);
        let p = (self.num as i128) * (other.den as i128);
        let q = (other.num as i128) * (self.den as i128);
        let d = p.div_euclid(q);
        if p.rem_euclid(q) != 0 { (d + 1) as i64 } else { d as i64 }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent::integer(n)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent::reduced(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent::reduced(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent { num: -self.num, den: self.den }
    }
}

impl Add<i64> for Exponent {
    type Output = Exponent;
    fn add(self, rhs: i64) -> Exponent {
        self + Exponent::integer(rhs)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.num as i128) * (other.den as i128);
        let rhs = (other.num as i128) * (self.den as i128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let e = Exponent::new(4, 8).unwrap();
        assert_eq!((e.num(), e.den()), (1, 2));
        let e = Exponent::new(3, -6).unwrap();
        assert_eq!((e.num(), e.den()), (-1, 2));
    }

    #[test]
    fn denominator_cap() {
        assert!(Exponent::new(1, 64).is_ok());
        assert!(matches!(Exponent::new(1, 65), Err(Error::DenominatorLimit(65))));
        let tight = Exponent::new(1, 64).unwrap();
        assert!(tight.halved().is_err());
    }

    #[test]
    fn ordering_is_by_value() {
        let half = Exponent::new(1, 2).unwrap();
        let third = Exponent::new(1, 3).unwrap();
        assert!(third < half);
        assert!(Exponent::integer(-1) < Exponent::ZERO);
    }

    #[test]
    fn div_ceil_rounds_up() {
        let ten = Exponent::integer(10);
        let three = Exponent::integer(3);
        assert_eq!(ten.div_ceil(&three), 4);
        assert_eq!(Exponent::integer(9).div_ceil(&three), 3);
        let half = Exponent::new(1, 2).unwrap();
        assert_eq!(ten.div_ceil(&half), 20);
    }
}
