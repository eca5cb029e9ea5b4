//! Assembly of parsed pieces into something runnable: expression, domain,
//! and point bindings, with unbound-variable checking.

use super::parser::{parse_domain, parse_expr, parse_point};
use super::Config;
use crate::asymfunc::AsymptoticFunction;
use crate::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
use crate::error::{Error, Result};
use crate::lcfield::AsymptoticScalar;

pub struct ParsedProgram {
    pub func: AsymptoticFunction,
    bindings: Vec<(usize, AsymptoticScalar)>,
}

fn var_name(i: usize) -> String {
    match i {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        _ => format!("x{i}"),
    }
}

impl ParsedProgram {
    /// Parses and cross-checks the expression, the optional point literal
    /// and the optional domain literal. Every variable of the expression
    /// must be a coordinate of the domain; the dimension defaults to the
    /// largest index seen.
    pub fn assemble(
        expr_src: &str,
        at_src: Option<&str>,
        domain_src: Option<&str>,
        config: &Config,
    ) -> Result<Self> {
        let expr = parse_expr(expr_src)?;
        let bindings = match at_src {
            Some(src) => parse_point(src, config.order)?,
            None => Vec::new(),
        };
        let bound_dim = bindings.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
        let dim = expr.arity().max(bound_dim).max(1);
        let domain = match domain_src {
            Some(src) => parse_domain(src)?,
            None => DomainSpec::full(dim),
        };
        if expr.arity() > domain.dim() {
            return Err(Error::UnboundVariable(var_name(expr.arity() - 1)));
        }
        if bound_dim > domain.dim() {
            return Err(Error::InvalidArgument(format!(
                "point binds {} coordinates but the domain has dimension {}",
                bound_dim,
                domain.dim()
            )));
        }
        let func = AsymptoticFunction::new(expr, domain)?;
        Ok(ParsedProgram { func, bindings })
    }

    /// Builds the evaluation point. Variables used by the expression must
    /// be bound; unbound unused coordinates fall back to the domain's
    /// canonical point.
    pub fn point(&self, config: &Config) -> Result<AsymptoticPoint> {
        let dom = self.func.domain();
        let d = dom.dim();
        let canonical = dom.canonical_point();
        let mut standard = vec![0.0; d];
        let mut infinitesimal = vec![AsymptoticScalar::zero(config.order); d];
        let mut bound = vec![false; d];
        for (i, value) in &self.bindings {
            standard[*i] = value.standard_part();
            infinitesimal[*i] =
                value.sub(&AsymptoticScalar::constant(value.standard_part(), value.order()));
            bound[*i] = true;
        }
        for i in 0..d {
            if !bound[i] {
                if i < self.func.expr().arity() {
                    return Err(Error::UnboundVariable(var_name(i)));
                }
                standard[i] = canonical[i];
            }
        }
        AsymptoticPoint::nearstandard(standard, AsymptoticVector::new(infinitesimal), dom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcfield::Exponent;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn assembles_expression_with_point() {
        let prog =
            ParsedProgram::assemble("x^2+1", Some("x=3+1*s"), None, &cfg()).unwrap();
        let p = prog.point(&cfg()).unwrap();
        let v = prog.func.evaluate(&p).unwrap();
        assert_eq!(v.re().coeff_at(Exponent::ZERO), 10.0);
        assert_eq!(v.re().coeff_at(Exponent::ONE), 6.0);
    }

    #[test]
    fn rejects_unbound_variables() {
        let prog = ParsedProgram::assemble("x+y", Some("x=1"), None, &cfg()).unwrap();
        assert!(matches!(
            prog.point(&cfg()),
            Err(Error::UnboundVariable(name)) if name == "y"
        ));
    }

    #[test]
    fn rejects_points_outside_the_domain() {
        let prog =
            ParsedProgram::assemble("x^2", Some("x=5"), Some("box(0,1)"), &cfg()).unwrap();
        assert!(matches!(prog.point(&cfg()), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn rejects_infinitely_large_point_coordinates() {
        let prog = ParsedProgram::assemble("x", Some("x=s^-1"), None, &cfg()).unwrap();
        assert!(matches!(prog.point(&cfg()), Err(Error::NotInfinitesimal { .. })));
    }
}
