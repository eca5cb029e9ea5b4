//! Theorems as executable checks: interval-topology limits, the evaluation
//! imbedding, scalar detection, and the gradient line integral.

mod fundamental;
mod limits;
mod quadrature;

pub use fundamental::{line_integral_gradient, scalar_detect, GradientSample, ScalarReport};
pub use limits::{
    continuity_check, derivative_quotient, differentiability_check, standard_probes,
    taylor_residual, FailureRecord, LimitReport, ProbeInfo, Witness,
};
pub use quadrature::gauss_legendre_unit;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymfunc::{AsymptoticFunction, Expr, ValueMap};
    use crate::asymvec::{AsymptoticPoint, AsymptoticVector, DomainSpec};
    use crate::lcfield::{
        AsymptoticComplex, AsymptoticScalar, Exponent, PrimitiveId, SeriesVerdict,
    };

    fn ord(n: i64) -> Exponent {
        Exponent::integer(n)
    }

    fn line() -> DomainSpec {
        DomainSpec::full(1)
    }

    fn at(x: f64) -> AsymptoticPoint {
        AsymptoticPoint::standard(vec![x], &line(), ord(10)).unwrap()
    }

    fn x_squared() -> AsymptoticFunction {
        AsymptoticFunction::new(Expr::pow(Expr::var(0), ord(2)), line()).unwrap()
    }

    fn x_cubed() -> AsymptoticFunction {
        AsymptoticFunction::new(Expr::pow(Expr::var(0), ord(3)), line()).unwrap()
    }

    #[test]
    fn continuity_of_x_squared_has_identity_witnesses() {
        let f = x_squared();
        let probes = standard_probes(1, 5, ord(10));
        let report = continuity_check(&f, &at(3.0), 5, &probes, 42).unwrap();
        assert_eq!(report.verdict, SeriesVerdict::Holds);
        // Delta F = 6h + h^2, so the witness for target n is exactly m = n
        for w in &report.witnesses {
            assert_eq!(w.m, w.n, "witness for n = {}", w.n);
        }
    }

    #[test]
    fn continuity_of_delta_at_zero_holds_with_shifted_witnesses() {
        let f = AsymptoticFunction::embed_delta(line()).unwrap();
        let probes = standard_probes(1, 5, ord(10));
        let report = continuity_check(&f, &at(0.0), 5, &probes, 42).unwrap();
        assert_eq!(report.verdict, SeriesVerdict::Holds);

        // independent witness derivation: for a probe of valuation v >= 2
        // the difference delta(h) - delta(0) has valuation 2v - 3, and for
        // v = 1 it is -1; the minimal admissible m follows directly
        let mut expected = Vec::new();
        for n in 1..=5i64 {
            let m = (0..)
                .find(|&m| {
                    (m + 1..=9).all(|v| {
                        let val = if v == 1 { -1 } else { 2 * v - 3 };
                        val > n
                    })
                })
                .unwrap();
            expected.push(m);
        }
        let got: Vec<i64> = report.witnesses.iter().map(|w| w.m).collect();
        assert_eq!(got, expected);
        // monotone witnesses
        assert!(got.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn continuity_of_a_constant_needs_no_shrinking() {
        let c = AsymptoticComplex::constant(2.5, 0.0, ord(10));
        let f = AsymptoticFunction::constant_function(&c, line());
        let probes = standard_probes(1, 4, ord(10));
        let report = continuity_check(&f, &at(1.0), 4, &probes, 42).unwrap();
        assert_eq!(report.verdict, SeriesVerdict::Holds);
        assert!(report.witnesses.iter().all(|w| w.m == 0));
    }

    #[test]
    fn differentiability_examples() {
        let probes = standard_probes(1, 4, ord(10));

        // F = x^2 at 3: residual quotient is exactly h
        let report = differentiability_check(&x_squared(), &at(3.0), 4, &probes, 42).unwrap();
        assert_eq!(report.verdict, SeriesVerdict::Holds);
        for w in &report.witnesses {
            assert_eq!(w.m, w.n);
        }

        // F = exp at 1: the residual for h = s is e s^2 / 2 + ...
        let exp = AsymptoticFunction::lift_primitive(PrimitiveId::Exp, line()).unwrap();
        let p = at(1.0);
        let base = exp.evaluate(&p).unwrap();
        let grad: Vec<AsymptoticComplex> =
            exp.gradient().iter().map(|g| g.evaluate(&p).unwrap()).collect();
        let h = AsymptoticVector::new(vec![AsymptoticScalar::scale()]);
        let residual = taylor_residual(&exp, &p, &base, &grad, &h).unwrap();
        assert_eq!(residual.valuation(), ord(2));
        assert!((residual.re().coeff_at(ord(2)) - std::f64::consts::E / 2.0).abs() < 1e-12);

        // F = x^3 at 0: residual is h^3, quotient valuation 2 v(h)
        let report = differentiability_check(&x_cubed(), &at(0.0), 4, &probes, 42).unwrap();
        assert_eq!(report.verdict, SeriesVerdict::Holds);
    }

    #[test]
    fn derivative_quotient_examples() {
        let f = x_squared();
        let s = AsymptoticScalar::scale();
        let q = derivative_quotient(&f, &at(3.0), &s).unwrap();
        assert_eq!(q.re().terms(), &[(ord(0), 6.0), (ord(1), 1.0)]);

        let s2 = AsymptoticScalar::monomial(1.0, ord(2), ord(10));
        let q = derivative_quotient(&f, &at(3.0), &s2).unwrap();
        assert_eq!(q.re().terms(), &[(ord(0), 6.0), (ord(2), 1.0)]);

        // sin(s)/s = 1 - s^2/6 + s^4/120 - ...
        let sin = AsymptoticFunction::lift_primitive(PrimitiveId::Sin, line()).unwrap();
        let q = derivative_quotient(&sin, &at(0.0), &s).unwrap();
        assert!((q.re().coeff_at(ord(0)) - 1.0).abs() < 1e-15);
        assert!((q.re().coeff_at(ord(2)) + 1.0 / 6.0).abs() < 1e-15);
        assert!((q.re().coeff_at(ord(4)) - 1.0 / 120.0).abs() < 1e-15);
    }

    #[test]
    fn derivative_quotient_takes_appreciable_steps() {
        // ((3.5)^2 - 3^2) / 0.5 = 6.5
        let f = x_squared();
        let h = AsymptoticScalar::real(0.5);
        let q = derivative_quotient(&f, &at(3.0), &h).unwrap();
        assert_eq!(q.re().terms(), &[(ord(0), 6.5)]);

        // shifted base points must stay inside the domain
        let unit = DomainSpec::interval(0.0, 1.0);
        let g = AsymptoticFunction::new(Expr::pow(Expr::var(0), ord(2)), unit.clone()).unwrap();
        let p = AsymptoticPoint::standard(vec![0.9], &unit, ord(10)).unwrap();
        assert!(matches!(
            derivative_quotient(&g, &p, &AsymptoticScalar::real(0.5)),
            Err(crate::error::Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn derivative_quotient_rejects_null_steps() {
        let f = x_squared();
        let null = AsymptoticScalar::zero(ord(10));
        assert!(matches!(
            derivative_quotient(&f, &at(3.0), &null),
            Err(crate::error::Error::NullDivision { .. })
        ));
    }

    #[test]
    fn quotient_approaches_the_derivative_value() {
        // valuation(quotient - F'(p)) >= valuation(h)
        let cases = [x_squared(), x_cubed()];
        for f in &cases {
            let fp = f.partial(0);
            for x in [0.5, -1.2] {
                for v in 1..=3 {
                    let h = AsymptoticScalar::monomial(0.7, ord(v), ord(10));
                    let q = derivative_quotient(f, &at(x), &h).unwrap();
                    let d = fp.evaluate(&at(x)).unwrap();
                    let gap = q.sub(&d);
                    assert!(gap.valuation() >= ord(v));
                }
            }
        }
    }

    #[test]
    fn value_map_is_a_ring_homomorphism_on_the_nose() {
        let mut gen = crate::asymfunc::ExprGen::new(31415, 1);
        for _ in 0..10 {
            let f = AsymptoticFunction::new(gen.expr(), line()).unwrap();
            let g = AsymptoticFunction::new(gen.expr(), line()).unwrap();
            let vf = ValueMap::new(f.clone());
            let vg = ValueMap::new(g.clone());
            let vsum = ValueMap::new(f.add(&g));
            let vprod = ValueMap::new(f.mul(&g));
            for x in [-1.0, 0.0, 0.8] {
                let p = at(x);
                // compare at the common knowledge order, exactly
                let eq = |a: &AsymptoticComplex, b: &AsymptoticComplex| {
                    let o = a.order().min(b.order());
                    a.truncate(o) == b.truncate(o)
                };
                let sum_direct = vsum.call(&p).unwrap();
                let sum_parts = vf.call(&p).unwrap().add(&vg.call(&p).unwrap());
                assert!(eq(&sum_direct, &sum_parts));
                let prod_direct = vprod.call(&p).unwrap();
                let prod_parts = vf.call(&p).unwrap().mul(&vg.call(&p).unwrap());
                assert!(eq(&prod_direct, &prod_parts));
            }
        }
    }

    #[test]
    fn value_map_separates_delta_from_zero() {
        let delta = AsymptoticFunction::embed_delta(line()).unwrap();
        let v = ValueMap::new(delta).call(&at(0.0)).unwrap();
        assert!(!v.is_null());
        assert_eq!(v.valuation(), ord(-1));
    }

    #[test]
    fn value_map_agrees_with_classical_evaluation() {
        let exp = AsymptoticFunction::lift_primitive(PrimitiveId::Exp, line()).unwrap();
        let v = ValueMap::new(exp).call(&at(0.0)).unwrap();
        assert_eq!(v.re().terms(), &[(ord(0), 1.0)]);
    }

    #[test]
    fn scalar_detect_on_a_constant() {
        let c = AsymptoticComplex::new(
            AsymptoticScalar::normalize(vec![(ord(0), 3.0), (ord(1), 1.0)], ord(10)),
            AsymptoticScalar::zero(ord(10)),
        );
        let f = AsymptoticFunction::constant_function(&c, line());
        let (report, witness) = scalar_detect(&f, 10, 2, 42).unwrap();
        assert_eq!(report.is_scalar, SeriesVerdict::Holds);
        assert!(report.constant.as_ref().unwrap().coeff_distance(&c) < 1e-15);
        // the witness is again a constant function with the same value
        let w = witness.unwrap();
        assert_eq!(w.equal_mod_null(&f, 5, 1, 7).unwrap(), SeriesVerdict::Holds);
    }

    #[test]
    fn scalar_detect_accepts_the_trig_identity() {
        let sin = Expr::comp(PrimitiveId::Sin, Expr::var(0));
        let cos = Expr::comp(PrimitiveId::Cos, Expr::var(0));
        let expr = Expr::add(Expr::pow(sin, ord(2)), Expr::pow(cos, ord(2)));
        let dom = DomainSpec::interval(-2.0, 2.0);
        let f = AsymptoticFunction::new(expr, dom).unwrap();
        let (report, _) = scalar_detect(&f, 20, 3, 42).unwrap();
        assert_eq!(report.is_scalar, SeriesVerdict::Holds);
        let c = report.constant.unwrap();
        let one = AsymptoticComplex::constant(1.0, 0.0, c.order());
        assert!(c.coeff_distance(&one) < 1e-10);
    }

    #[test]
    fn scalar_detect_rejects_the_identity_function() {
        let f = AsymptoticFunction::new(Expr::var(0), line()).unwrap();
        let (report, witness) = scalar_detect(&f, 10, 1, 42).unwrap();
        assert_eq!(report.is_scalar, SeriesVerdict::Fails);
        assert!(witness.is_none());
        assert!(!report.gradient_evidence.is_empty());
        for sample in &report.gradient_evidence {
            assert!((sample.gradient[0].re().standard_part() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn scalar_detect_requires_connectedness() {
        let dom = DomainSpec::union(
            DomainSpec::interval(0.0, 1.0),
            DomainSpec::interval(2.0, 3.0),
        );
        let f = AsymptoticFunction::new(Expr::real(1.0), dom).unwrap();
        assert!(matches!(
            scalar_detect(&f, 5, 1, 42),
            Err(crate::error::Error::NotConnected)
        ));
    }

    #[test]
    fn line_integral_examples() {
        let f = x_squared();
        let p1 = at(0.0);
        let h = AsymptoticVector::new(vec![AsymptoticScalar::scale()]);
        let p2 = AsymptoticPoint::nearstandard(vec![1.0], h, &line()).unwrap();

        // integral of 2x dx from 0 to 1+s is (1+s)^2
        let v = line_integral_gradient(&f, &p1, &p2, 2).unwrap();
        assert!((v.re().coeff_at(ord(0)) - 1.0).abs() < 1e-13);
        assert!((v.re().coeff_at(ord(1)) - 2.0).abs() < 1e-13);
        assert!((v.re().coeff_at(ord(2)) - 1.0).abs() < 1e-13);

        // degree-3 integrand still exact with 2 nodes
        let g = x_cubed();
        let v = line_integral_gradient(&g, &p1, &p2, 2).unwrap();
        let expect = g.evaluate(&p2).unwrap().sub(&g.evaluate(&p1).unwrap());
        assert!(v.coeff_distance(&expect) < 1e-12);

        // constant functions integrate to null
        let c = AsymptoticComplex::constant(4.0, 0.0, ord(10));
        let k = AsymptoticFunction::constant_function(&c, line());
        let v = line_integral_gradient(&k, &p1, &p2, 3).unwrap();
        assert!(v.is_null());
    }

    #[test]
    fn line_integral_refuses_to_leave_the_domain() {
        let dom = DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0);
        let f = AsymptoticFunction::new(
            Expr::add(Expr::pow(Expr::var(0), ord(2)), Expr::pow(Expr::var(1), ord(2))),
            dom.clone(),
        )
        .unwrap();
        let p1 = AsymptoticPoint::standard(vec![1.5, 0.0], &dom, ord(10)).unwrap();
        let p2 = AsymptoticPoint::standard(vec![-1.5, 0.0], &dom, ord(10)).unwrap();
        assert!(matches!(
            line_integral_gradient(&f, &p1, &p2, 3),
            Err(crate::error::Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn fundamental_theorem_on_an_annulus_segment() {
        let dom = DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0);
        // F = x^2 y + y^3 restricted to the annulus
        let expr = Expr::add(
            Expr::mul(Expr::pow(Expr::var(0), ord(2)), Expr::var(1)),
            Expr::pow(Expr::var(1), ord(3)),
        );
        let f = AsymptoticFunction::new(expr, dom.clone()).unwrap();
        let h1 = AsymptoticVector::new(vec![
            AsymptoticScalar::monomial(0.3, ord(1), ord(10)),
            AsymptoticScalar::zero(ord(10)),
        ]);
        let h2 = AsymptoticVector::new(vec![
            AsymptoticScalar::zero(ord(10)),
            AsymptoticScalar::monomial(-0.5, ord(2), ord(10)),
        ]);
        let p1 = AsymptoticPoint::nearstandard(vec![1.5, 0.2], h1, &dom).unwrap();
        let p2 = AsymptoticPoint::nearstandard(vec![1.2, 0.8], h2, &dom).unwrap();
        let lhs = line_integral_gradient(&f, &p1, &p2, 4).unwrap();
        let rhs = f.evaluate(&p2).unwrap().sub(&f.evaluate(&p1).unwrap());
        assert!(lhs.coeff_distance(&rhs) < 1e-10);
    }

    #[test]
    fn limits_hold_at_points_with_infinitesimal_parts() {
        let f = x_squared();
        let h = AsymptoticVector::new(vec![AsymptoticScalar::scale()]);
        let p = AsymptoticPoint::nearstandard(vec![3.0], h, &line()).unwrap();
        let probes = standard_probes(1, 4, ord(10));
        assert_eq!(
            continuity_check(&f, &p, 4, &probes, 3).unwrap().verdict,
            SeriesVerdict::Holds
        );
        assert_eq!(
            differentiability_check(&f, &p, 4, &probes, 3).unwrap().verdict,
            SeriesVerdict::Holds
        );
    }

    #[test]
    fn derivatives_remain_pointwise_continuous() {
        // values of every derivative are again continuous in the ball base
        let probes = standard_probes(1, 3, ord(10));
        let fns = [
            AsymptoticFunction::embed_delta(line()).unwrap(),
            AsymptoticFunction::lift_primitive(PrimitiveId::Sin, line()).unwrap(),
            x_cubed(),
        ];
        for f in &fns {
            for depth in 1..=2 {
                let df = f.differentiate(&crate::asymfunc::MultiIndex::new(vec![depth]));
                for x in [0.0, 0.8] {
                    let report = continuity_check(&df, &at(x), 3, &probes, 1).unwrap();
                    assert_eq!(report.verdict, SeriesVerdict::Holds, "depth {depth} at {x}");
                }
            }
        }
    }

    #[test]
    fn limit_report_serialization_is_deterministic() {
        let f = x_squared();
        let probes = standard_probes(1, 3, ord(10));
        let a = continuity_check(&f, &at(1.0), 3, &probes, 9).unwrap().to_json();
        let b = continuity_check(&f, &at(1.0), 3, &probes, 9).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"check\":\"continuity\""));
        assert!(a.contains("\"witnesses\""));
        assert!(a.contains("\"seed\":9"));
    }
}
