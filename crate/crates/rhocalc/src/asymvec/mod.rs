//! Asymptotic vectors, neighborhood balls, domains and nearstandard points.

mod domain;
mod point;
mod vector;

pub use domain::DomainSpec;
pub use point::{point_from_json, point_to_json, AsymptoticPoint};
pub use vector::AsymptoticVector;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcfield::{AsymptoticScalar, Classification, Exponent, SeriesVerdict};

    fn ord(n: i64) -> Exponent {
        Exponent::integer(n)
    }

    fn vec_of(terms: Vec<AsymptoticScalar>) -> AsymptoticVector {
        AsymptoticVector::new(terms)
    }

    #[test]
    fn norm_examples() {
        let v = vec_of(vec![AsymptoticScalar::real(3.0), AsymptoticScalar::real(4.0)]);
        assert_eq!(v.norm().terms(), &[(ord(0), 5.0)]);

        let v = vec_of(vec![AsymptoticScalar::scale(), AsymptoticScalar::zero(ord(10))]);
        assert_eq!(v.norm().terms(), &[(ord(1), 1.0)]);

        let v = vec_of(vec![AsymptoticScalar::scale(), AsymptoticScalar::scale()]);
        let n = v.norm();
        assert!((n.coeff_at(ord(1)) - 2.0f64.sqrt()).abs() < 1e-12);
        // oracle: the square of the norm is 2 s^2
        let sq = n.mul(&n);
        let two_s2 = AsymptoticScalar::monomial(2.0, ord(2), sq.order());
        assert!(sq.coeff_distance(&two_s2) < 1e-12);
    }

    #[test]
    fn norm_of_null_vector_keeps_order() {
        let v = AsymptoticVector::zero(2, ord(10));
        let n = v.norm();
        assert!(n.is_null());
        assert_eq!(n.order(), ord(10));
    }

    #[test]
    fn classify_vector_examples() {
        use Classification::*;
        let s = AsymptoticScalar::scale;
        let s2 = AsymptoticScalar::monomial(1.0, ord(2), ord(10));
        assert_eq!(vec_of(vec![s(), s2]).classify(), Infinitesimal);
        assert_eq!(vec_of(vec![AsymptoticScalar::real(1.0), s()]).classify(), FiniteAppreciable);
        let big = AsymptoticScalar::monomial(1.0, ord(-1), ord(10));
        assert_eq!(vec_of(vec![big, AsymptoticScalar::real(1.0)]).classify(), InfinitelyLarge);
    }

    #[test]
    fn in_ball_examples() {
        let s3 = vec_of(vec![AsymptoticScalar::monomial(1.0, ord(3), ord(10))]);
        assert_eq!(s3.in_ball(2), SeriesVerdict::Holds);

        // the boundary is not strictly inside
        let s1 = vec_of(vec![AsymptoticScalar::scale()]);
        assert_eq!(s1.in_ball(1), SeriesVerdict::Fails);

        let null = AsymptoticVector::zero(1, ord(10));
        assert_eq!(null.in_ball(9), SeriesVerdict::Holds);
        assert_eq!(null.in_ball(10), SeriesVerdict::IndistinguishableAtOrder);
    }

    #[test]
    fn nearstandard_construction() {
        let dom = DomainSpec::full(1);
        let h = vec_of(vec![AsymptoticScalar::scale()]);
        let p = AsymptoticPoint::nearstandard(vec![0.0], h, &dom).unwrap();
        assert_eq!(p.coordinate(0).terms(), &[(ord(1), 1.0)]);

        // standard points belong to the nearstandard set
        let q = AsymptoticPoint::standard(vec![1.0], &dom, ord(10)).unwrap();
        assert_eq!(q.coordinate(0).terms(), &[(ord(0), 1.0)]);

        let unit = DomainSpec::interval(0.0, 1.0);
        let err = AsymptoticPoint::standard(vec![5.0], &unit, ord(10));
        assert!(matches!(err, Err(crate::error::Error::OutsideDomain(_))));
    }

    #[test]
    fn nearstandard_rejects_appreciable_displacements() {
        let dom = DomainSpec::full(1);
        let h = vec_of(vec![AsymptoticScalar::real(0.5)]);
        let err = AsymptoticPoint::nearstandard(vec![0.0], h, &dom);
        assert!(matches!(err, Err(crate::error::Error::NotInfinitesimal { coord: 0, .. })));
    }

    #[test]
    fn norm_scales_by_series_absolute_values() {
        let v = vec_of(vec![AsymptoticScalar::real(3.0), AsymptoticScalar::real(4.0)]);
        let cases = [
            AsymptoticScalar::normalize(vec![(ord(0), 1.0), (ord(1), 1.0)], ord(10)),
            AsymptoticScalar::monomial(-2.0, ord(2), ord(10)),
        ];
        for a in cases {
            let lhs = v.mul_scalar(&a).norm();
            let abs_a = crate::lcfield::AsymptoticComplex::from_real(a).abs();
            let rhs = v.norm().mul(&abs_a);
            assert!(lhs.coeff_distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn point_json_round_trips() {
        let dom = DomainSpec::open_box(vec![-2.0, -2.0], vec![2.0, 2.0]);
        let h = AsymptoticVector::new(vec![
            AsymptoticScalar::monomial(1.0 / 3.0, ord(2), ord(10)),
            AsymptoticScalar::zero(ord(10)),
        ]);
        let p = AsymptoticPoint::nearstandard(vec![0.5, -1.25], h, &dom).unwrap();
        let text = point_to_json(&p);
        let back = point_from_json(&text, &dom).unwrap();
        assert_eq!(p, back);
        assert_eq!(text, point_to_json(&back));
        // membership is still enforced on the way in
        let narrow = DomainSpec::interval(0.0, 1.0);
        assert!(point_from_json("{\"standard\":[5.0],\"infinitesimal\":[{\"terms\":[],\"order\":[10,1]}]}", &narrow).is_err());
    }

    #[test]
    fn one_dimensional_norm_is_absolute_value() {
        let a = AsymptoticScalar::normalize(
            vec![(ord(0), -2.0), (ord(1), 1.0)],
            ord(10),
        );
        let v = vec_of(vec![a.clone()]);
        let abs = crate::lcfield::AsymptoticComplex::from_real(a).abs();
        assert!(v.norm().coeff_distance(&abs) < 1e-12);
    }

    mod properties {
        use super::*;
        use crate::lcfield::Comparison;
        use proptest::prelude::*;

        // finite-valued, well-conditioned coordinates: the algebraic laws are
        // float-fragile when coefficient ratios blow up across many powers
        fn arb_scalar() -> impl Strategy<Value = AsymptoticScalar> {
            proptest::collection::vec((0i64..=6, 0.25f64..2.0, proptest::bool::ANY), 0..4)
                .prop_map(|raw| {
                    AsymptoticScalar::normalize(
                        raw.into_iter()
                            .map(|(e, c, neg)| (Exponent::integer(e), if neg { -c } else { c }))
                            .collect(),
                        Exponent::integer(8),
                    )
                })
        }

        fn arb_vector() -> impl Strategy<Value = AsymptoticVector> {
            proptest::collection::vec(arb_scalar(), 1..4).prop_map(AsymptoticVector::new)
        }

        fn sup(a: &AsymptoticScalar) -> f64 {
            a.terms().iter().map(|(_, c)| c.abs()).fold(1.0, f64::max)
        }

        proptest! {
            #[test]
            fn norm_is_nonnegative(v in arb_vector()) {
                let n = v.norm();
                if let Some((_, c)) = n.leading() {
                    prop_assert!(c > 0.0);
                }
            }

            #[test]
            fn norm_is_absolutely_homogeneous(v in arb_vector(), k in -2.0f64..2.0) {
                let lhs = v.scaled(k).norm();
                let rhs = v.norm().scaled(k.abs());
                let scale = sup(&lhs).max(sup(&rhs));
                // tau floor: normalization quantizes coefficients at the zero threshold
                prop_assert!(lhs.coeff_distance(&rhs) <= 1e-10 * scale + 2.0 * crate::lcfield::TAU);
            }

            #[test]
            fn triangle_inequality(u in arb_vector(), v in arb_vector()) {
                if u.dim() == v.dim() {
                    let lhs = u.add(&v).norm();
                    let rhs = u.norm().add(&v.norm());
                    // ||u+v|| <= ||u|| + ||v||: any strict violation can only
                    // be square-root rounding dust, relative to scale
                    if rhs.compare(&lhs) == Comparison::Less {
                        let gap = lhs.sub(&rhs).leading().map(|(_, c)| c).unwrap_or(0.0);
                        let scale = sup(&lhs).max(sup(&rhs));
                        prop_assert!(gap.abs() <= 1e-9 * scale + 2.0 * crate::lcfield::TAU, "gap {gap} at scale {scale}");
                    }
                }
            }
        }
    }
}
