//! Seeded generator of expression trees for suite checks.
//!
//! Generated trees are evaluable at every finite point: no logarithms, no
//! negative or fractional powers, and transcendental primitives only on
//! shallow arguments so magnitudes stay reasonable.

use super::expr::Expr;
use crate::lcfield::{Exponent, PrimitiveId};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub struct ExprGen {
    rng: ChaCha8Rng,
    dim: usize,
}

impl ExprGen {
    pub fn new(seed: u64, dim: usize) -> Self {
        assert!(dim >= 1);
        ExprGen { rng: ChaCha8Rng::seed_from_u64(seed), dim }
    }

    pub fn expr(&mut self) -> Arc<Expr> {
        self.node(3)
    }

    fn leaf(&mut self) -> Arc<Expr> {
        match self.rng.gen_range(0..5) {
            0 | 1 => Expr::var(self.rng.gen_range(0..self.dim)),
            2 => {
                let mag = self.rng.gen_range(0.2..2.0);
                let sign = if self.rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                Expr::real(sign * mag)
            }
            3 => Expr::rho_pow(Exponent::integer(self.rng.gen_range(1..=3))),
            _ => Expr::var(self.rng.gen_range(0..self.dim)),
        }
    }

    fn node(&mut self, depth: usize) -> Arc<Expr> {
        if depth == 0 {
            return self.leaf();
        }
        match self.rng.gen_range(0..8) {
            0 | 1 => Expr::add(self.node(depth - 1), self.node(depth - 1)),
            2 | 3 => Expr::mul(self.node(depth - 1), self.node(depth - 1)),
            4 => Expr::pow(self.leaf(), Exponent::integer(self.rng.gen_range(2..=3))),
            5 => {
                let prim = match self.rng.gen_range(0..3) {
                    0 => PrimitiveId::Exp,
                    1 => PrimitiveId::Sin,
                    _ => PrimitiveId::Cos,
                };
                // shallow argument keeps exp magnitudes desk-scale
                Expr::comp(prim, self.shallow_arg())
            }
            _ => self.leaf(),
        }
    }

    fn shallow_arg(&mut self) -> Arc<Expr> {
        if self.rng.gen_bool(0.5) {
            self.leaf()
        } else {
            Expr::add(self.leaf(), self.leaf())
        }
    }
}
