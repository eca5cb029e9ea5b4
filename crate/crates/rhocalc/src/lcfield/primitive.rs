//! Smooth primitives available for analytic lifting: exact Taylor
//! coefficients at any real center, plus a rule for infinitely large
//! arguments.
//!
//! The Gaussian pair backs the distribution embeddings:
//! `gauss_phi(t) = exp(-t^2)/sqrt(pi)` integrates to one, and `gauss_Phi`
//! is its antiderivative with limits 0 and 1.

use super::exponent::Exponent;
use super::scalar::AsymptoticScalar;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimitiveId {
    Exp,
    Log,
    Sin,
    Cos,
    /// Mollifier kernel `exp(-t^2)/sqrt(pi)`.
    GaussPhi,
    /// Antiderivative of the kernel, `(1 + erf(t))/2`.
    GaussCumulative,
    /// Monomial `t^k`; lifted exactly through integer powers.
    Poly(u32),
}

impl PrimitiveId {
    pub fn parse(name: &str) -> Option<PrimitiveId> {
        match name {
            "exp" => Some(PrimitiveId::Exp),
            "log" => Some(PrimitiveId::Log),
            "sin" => Some(PrimitiveId::Sin),
            "cos" => Some(PrimitiveId::Cos),
            "gauss_phi" => Some(PrimitiveId::GaussPhi),
            "gauss_Phi" => Some(PrimitiveId::GaussCumulative),
            _ => None,
        }
    }

    /// Reason the center is outside the primitive's real domain, if it is.
    pub fn domain_violation(&self, center: f64) -> Option<String> {
        match self {
            PrimitiveId::Log if center <= 0.0 => {
                Some(format!("log requires a positive standard part, got {center}"))
            }
            _ => None,
        }
    }

    /// Stream of `p^(k)(center) / k!` for `k = 0, 1, 2, ...`.
    pub fn taylor_coeffs(&self, center: f64) -> TaylorCoeffs {
        TaylorCoeffs::new(*self, center)
    }

    /// Value of `p^(0)` at the center.
    pub fn value(&self, center: f64) -> f64 {
        self.taylor_coeffs(center).next().expect("stream is infinite")
    }

    /// Resolution at an infinitely large argument of the given sign. Decay
    /// rules return the null series, limit rules the constant; primitives
    /// without a representable limit refuse.
    pub fn infinite_limit(&self, positive_side: bool, order: Exponent) -> Result<AsymptoticScalar> {
        match (self, positive_side) {
            (PrimitiveId::Exp, true) => Err(Error::NotModerate(
                "exp of a positive infinitely large argument exceeds every power of the scale"
                    .into(),
            )),
            (PrimitiveId::Exp, false) => Ok(AsymptoticScalar::zero(order)),
            (PrimitiveId::Log, true) => Err(Error::NotModerate(
                "log of an infinitely large argument has no truncated-series representation"
                    .into(),
            )),
            (PrimitiveId::Log, false) => {
                Err(Error::Domain("log of a negative infinitely large argument".into()))
            }
            (PrimitiveId::Sin | PrimitiveId::Cos, _) => Err(Error::NotModerate(
                "oscillatory primitive at an infinitely large argument is not determined by the formal scale"
                    .into(),
            )),
            (PrimitiveId::GaussPhi, _) => Ok(AsymptoticScalar::zero(order)),
            (PrimitiveId::GaussCumulative, true) => Ok(AsymptoticScalar::constant(1.0, order)),
            (PrimitiveId::GaussCumulative, false) => Ok(AsymptoticScalar::zero(order)),
            (PrimitiveId::Poly(_), _) => {
                unreachable!("polynomial primitives are lifted through exact powers")
            }
        }
    }
}

impl fmt::Display for PrimitiveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimitiveId::Exp => write!(f, "exp"),
            PrimitiveId::Log => write!(f, "log"),
            PrimitiveId::Sin => write!(f, "sin"),
            PrimitiveId::Cos => write!(f, "cos"),
            PrimitiveId::GaussPhi => write!(f, "gauss_phi"),
            PrimitiveId::GaussCumulative => write!(f, "gauss_Phi"),
            PrimitiveId::Poly(k) => write!(f, "poly_{k}"),
        }
    }
}

/// Iterator over scaled Taylor derivatives, driven by per-primitive
/// recurrences so no factorial is ever materialized.
pub struct TaylorCoeffs {
    prim: PrimitiveId,
    center: f64,
    k: usize,
    // rolling state; meaning depends on the primitive
    a: f64,
    b: f64,
}

impl TaylorCoeffs {
    fn new(prim: PrimitiveId, center: f64) -> Self {
        TaylorCoeffs { prim, center, k: 0, a: 0.0, b: 0.0 }
    }
}

impl Iterator for TaylorCoeffs {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let t = self.center;
        let k = self.k;
        let out = match self.prim {
            PrimitiveId::Exp => {
                if k == 0 {
                    self.a = t.exp();
                } else {
                    self.a /= k as f64;
                }
                self.a
            }
            PrimitiveId::Log => match k {
                0 => t.ln(),
                1 => {
                    self.a = 1.0 / t;
                    self.a
                }
                _ => {
                    self.a *= -((k - 1) as f64) / (k as f64 * t);
                    self.a
                }
            },
            PrimitiveId::Sin | PrimitiveId::Cos => {
                // a = c_{k-2}, b = c_{k-1}
                let c = match k {
                    0 => {
                        if self.prim == PrimitiveId::Sin { t.sin() } else { t.cos() }
                    }
                    1 => {
                        if self.prim == PrimitiveId::Sin { t.cos() } else { -t.sin() }
                    }
                    _ => -self.a / ((k * (k - 1)) as f64),
                };
                self.a = self.b;
                self.b = c;
                c
            }
            PrimitiveId::GaussPhi | PrimitiveId::GaussCumulative => {
                // a = H_{k-1}(t)/(k-1)!, b = H_k(t)/k! (signs folded in below)
                let phi = (-t * t).exp() / std::f64::consts::PI.sqrt();
                let m = match k {
                    0 => 1.0,
                    1 => 2.0 * t,
                    _ => (2.0 * t * self.b - 2.0 * self.a) / k as f64,
                };
                if k >= 1 {
                    self.a = self.b;
                }
                self.b = m;
                let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
                match self.prim {
                    PrimitiveId::GaussPhi => sign * m * phi,
                    PrimitiveId::GaussCumulative => {
                        if k == 0 {
                            0.5 * (1.0 + libm::erf(t))
                        } else {
                            // Phi^(k) = phi^(k-1); self.a now holds H_{k-1}/(k-1)!
                            let prev_sign = if (k - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
                            prev_sign * self.a * phi / k as f64
                        }
                    }
                    _ => unreachable!(),
                }
            }
            PrimitiveId::Poly(n) => {
                let n = n as usize;
                if k == 0 {
                    self.a = 1.0; // running binomial C(n, k)
                } else {
                    self.a *= (n + 1 - k) as f64 / k as f64;
                }
                if k > n { 0.0 } else { self.a * t.powi((n - k) as i32) }
            }
        };
        self.k += 1;
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: PrimitiveId, t: f64, n: usize) -> Vec<f64> {
        p.taylor_coeffs(t).take(n).collect()
    }

    #[test]
    fn exp_coeffs_are_inverse_factorials() {
        let c = coeffs(PrimitiveId::Exp, 0.0, 6);
        let expect = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0];
        for (a, b) in c.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn log_coeffs_at_one() {
        // log(1+u) = u - u^2/2 + u^3/3 - ...
        let c = coeffs(PrimitiveId::Log, 1.0, 5);
        let expect = [0.0, 1.0, -0.5, 1.0 / 3.0, -0.25];
        for (a, b) in c.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn sin_cos_cycle() {
        let s = coeffs(PrimitiveId::Sin, 0.0, 6);
        for (a, b) in s.iter().zip([0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        let c = coeffs(PrimitiveId::Cos, 0.0, 5);
        for (a, b) in c.iter().zip([1.0, 0.0, -0.5, 0.0, 1.0 / 24.0]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    /// Finite-difference oracle for the kernel derivatives: independent of
    /// the Hermite recurrence used by the stream.
    #[test]
    fn gauss_phi_matches_finite_differences() {
        let phi = |t: f64| (-t * t).exp() / std::f64::consts::PI.sqrt();
        for &t0 in &[0.0, 0.7, -1.3] {
            let c = coeffs(PrimitiveId::GaussPhi, t0, 4);
            let h = 1e-4;
            let d1 = (phi(t0 + h) - phi(t0 - h)) / (2.0 * h);
            let d2 = (phi(t0 + h) - 2.0 * phi(t0) + phi(t0 - h)) / (h * h);
            let d3 = (phi(t0 + 2.0 * h) - 2.0 * phi(t0 + h) + 2.0 * phi(t0 - h)
                - phi(t0 - 2.0 * h))
                / (2.0 * h * h * h);
            assert!((c[0] - phi(t0)).abs() < 1e-12);
            assert!((c[1] - d1).abs() < 1e-6, "phi' at {t0}: {} vs {}", c[1], d1);
            assert!((c[2] - d2 / 2.0).abs() < 1e-5);
            assert!((c[3] - d3 / 6.0).abs() < 1e-3);
        }
    }

    #[test]
    fn gauss_cumulative_derivative_is_kernel() {
        for &t0 in &[0.0, 0.4, -2.1] {
            let phi_c: Vec<f64> = coeffs(PrimitiveId::GaussPhi, t0, 4);
            let cum: Vec<f64> = coeffs(PrimitiveId::GaussCumulative, t0, 5);
            // Phi^(k+1)/(k+1)! = phi^(k)/k! / (k+1)
            for k in 0..4 {
                assert!((cum[k + 1] - phi_c[k] / (k as f64 + 1.0)).abs() < 1e-14);
            }
        }
        assert!((PrimitiveId::GaussCumulative.value(0.0) - 0.5).abs() < 1e-15);
    }
}
