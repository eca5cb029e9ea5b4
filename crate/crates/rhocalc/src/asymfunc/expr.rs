//! Expression trees representing asymptotic functions, with symbolic
//! differentiation and a parseable pretty-printer.
//!
//! Trees are immutable and shared through `Arc`; differentiation builds new
//! trees. No rewriting/simplification pass exists: equality of functions is
//! semantic (`equal_mod_null`), not structural. The construction helpers
//! only collapse multiplications by literal 0/1 so derivative trees stay a
//! reasonable size.

use crate::lcfield::{Exponent, PrimitiveId};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Coordinate variable (index into the domain's dimensions).
    Var(usize),
    /// Complex constant.
    Const { re: f64, im: f64 },
    /// Power of the scale, `s^q`.
    RhoPow(Exponent),
    Add(Arc<Expr>, Arc<Expr>),
    Mul(Arc<Expr>, Arc<Expr>),
    /// Rational power of a subexpression; integer exponents are exact
    /// powers, fractional ones require a positive-leading real argument.
    Pow(Arc<Expr>, Exponent),
    /// Application of a smooth primitive.
    Comp(PrimitiveId, Arc<Expr>),
}

#[allow(clippy::should_implement_trait)] // builders over Arc, not value ops
impl Expr {
    pub fn var(i: usize) -> Arc<Expr> {
        Arc::new(Expr::Var(i))
    }

    pub fn real(c: f64) -> Arc<Expr> {
        Arc::new(Expr::Const { re: c, im: 0.0 })
    }

    pub fn complex(re: f64, im: f64) -> Arc<Expr> {
        Arc::new(Expr::Const { re, im })
    }

    pub fn rho_pow(q: Exponent) -> Arc<Expr> {
        Arc::new(Expr::RhoPow(q))
    }

    pub fn add(a: Arc<Expr>, b: Arc<Expr>) -> Arc<Expr> {
        if a.is_zero_const() {
            return b;
        }
        if b.is_zero_const() {
            return a;
        }
        Arc::new(Expr::Add(a, b))
    }

    pub fn mul(a: Arc<Expr>, b: Arc<Expr>) -> Arc<Expr> {
        if a.is_zero_const() || b.is_zero_const() {
            return Expr::real(0.0);
        }
        if a.is_one_const() {
            return b;
        }
        if b.is_one_const() {
            return a;
        }
        Arc::new(Expr::Mul(a, b))
    }

    pub fn neg(a: Arc<Expr>) -> Arc<Expr> {
        Expr::mul(Expr::real(-1.0), a)
    }

    pub fn sub(a: Arc<Expr>, b: Arc<Expr>) -> Arc<Expr> {
        Expr::add(a, Expr::neg(b))
    }

    pub fn pow(e: Arc<Expr>, q: Exponent) -> Arc<Expr> {
        if q == Exponent::ZERO {
            return Expr::real(1.0);
        }
        if q == Exponent::ONE {
            return e;
        }
        // powers of the scale stay a single node when the product is exact
        if let Expr::RhoPow(p) = e.as_ref() {
            if let Ok(combined) = p.checked_mul(&q) {
                return Expr::rho_pow(combined);
            }
        }
        Arc::new(Expr::Pow(e, q))
    }

    pub fn comp(p: PrimitiveId, e: Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::Comp(p, e))
    }

    fn is_zero_const(&self) -> bool {
        matches!(self, Expr::Const { re, im } if *re == 0.0 && *im == 0.0)
    }

    fn is_one_const(&self) -> bool {
        matches!(self, Expr::Const { re, im } if *re == 1.0 && *im == 0.0)
    }

    /// Largest variable index plus one (0 for variable-free trees).
    pub fn arity(&self) -> usize {
        match self {
            Expr::Var(i) => i + 1,
            Expr::Const { .. } | Expr::RhoPow(_) => 0,
            Expr::Add(a, b) | Expr::Mul(a, b) => a.arity().max(b.arity()),
            Expr::Pow(e, _) | Expr::Comp(_, e) => e.arity(),
        }
    }

    /// Partial derivative with respect to variable `i`. Powers of the scale
    /// are constants under differentiation.
    pub fn derivative(self: &Arc<Expr>, i: usize) -> Arc<Expr> {
        match self.as_ref() {
            Expr::Var(j) => Expr::real(if *j == i { 1.0 } else { 0.0 }),
            Expr::Const { .. } | Expr::RhoPow(_) => Expr::real(0.0),
            Expr::Add(a, b) => Expr::add(a.derivative(i), b.derivative(i)),
            Expr::Mul(a, b) => Expr::add(
                Expr::mul(a.derivative(i), b.clone()),
                Expr::mul(a.clone(), b.derivative(i)),
            ),
            Expr::Pow(e, q) => {
                let factor = Expr::mul(
                    Expr::real(q.as_f64()),
                    Expr::pow(e.clone(), *q - Exponent::ONE),
                );
                Expr::mul(factor, e.derivative(i))
            }
            Expr::Comp(p, e) => Expr::mul(primitive_derivative(*p, e), e.derivative(i)),
        }
    }
}

/// Derivative of a primitive as an expression in its argument.
fn primitive_derivative(p: PrimitiveId, arg: &Arc<Expr>) -> Arc<Expr> {
    match p {
        PrimitiveId::Exp => Expr::comp(PrimitiveId::Exp, arg.clone()),
        PrimitiveId::Log => Expr::pow(arg.clone(), Exponent::integer(-1)),
        PrimitiveId::Sin => Expr::comp(PrimitiveId::Cos, arg.clone()),
        PrimitiveId::Cos => Expr::neg(Expr::comp(PrimitiveId::Sin, arg.clone())),
        // phi'(t) = -2 t phi(t)
        PrimitiveId::GaussPhi => Expr::mul(
            Expr::mul(Expr::real(-2.0), arg.clone()),
            Expr::comp(PrimitiveId::GaussPhi, arg.clone()),
        ),
        PrimitiveId::GaussCumulative => Expr::comp(PrimitiveId::GaussPhi, arg.clone()),
        PrimitiveId::Poly(k) => {
            if k == 0 {
                Expr::real(0.0)
            } else {
                Expr::mul(
                    Expr::real(k as f64),
                    Expr::pow(arg.clone(), Exponent::integer(k as i64 - 1)),
                )
            }
        }
    }
}

/// A multi-index for iterated partial derivatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(alpha: Vec<usize>) -> Self {
        MultiIndex(alpha)
    }

    pub fn zero(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut alpha = vec![0; d];
        alpha[i] = 1;
        MultiIndex(alpha)
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All multi-indices over `d` variables with `|alpha| <= max_total`.
    pub fn all_up_to(d: usize, max_total: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = vec![0usize; d];
        fn rec(current: &mut Vec<usize>, pos: usize, budget: usize, out: &mut Vec<MultiIndex>) {
            if pos == current.len() {
                out.push(MultiIndex(current.clone()));
                return;
            }
            for k in 0..=budget {
                current[pos] = k;
                rec(current, pos + 1, budget - k, out);
            }
            current[pos] = 0;
        }
        rec(&mut current, 0, max_total, &mut out);
        out.sort_by_key(MultiIndex::total);
        out
    }
}

// precedence levels for printing: Add < Mul < Pow < atom
fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Pow(..) => 3,
        Expr::RhoPow(q) if *q != Exponent::ONE => 3,
        Expr::Const { re, .. } if *re < 0.0 => 2,
        _ => 4,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
    if precedence(e) < min_prec {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, q: &Exponent) -> fmt::Result {
    if q.is_integer() && q.num() >= 0 {
        write!(f, "^{}", q.num())
    } else {
        write!(f, "^({q})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => match i {
                0 => write!(f, "x"),
                1 => write!(f, "y"),
                2 => write!(f, "z"),
                _ => write!(f, "x{i}"),
            },
            Expr::Const { re, im } => {
                if *im == 0.0 {
                    write!(f, "{re}")
                } else {
                    write!(f, "({re}+{im}i)")
                }
            }
            Expr::RhoPow(q) => {
                if *q == Exponent::ONE {
                    write!(f, "s")
                } else {
                    write!(f, "s")?;
                    write_exponent(f, q)
                }
            }
            Expr::Add(a, b) => {
                write_child(f, a, 1)?;
                write!(f, " + ")?;
                write_child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_child(f, a, 2)?;
                write!(f, "*")?;
                write_child(f, b, 3)
            }
            Expr::Pow(e, q) => {
                write_child(f, e, 4)?;
                write_exponent(f, q)
            }
            Expr::Comp(p, e) => write!(f, "{p}({e})"),
        }
    }
}
