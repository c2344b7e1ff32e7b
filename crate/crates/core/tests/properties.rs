mod common;

use std::sync::Arc;

use gradalg::bk::{bk_algebra, canonical_grading, same_class, validate_bk};
use gradalg::constructions::jacobian_tangent_dim;
use gradalg::graded::{
    classify_action, hilbert_dims, hilbert_series_coefficients, homogeneity, is_unit, normal_form, Homogeneity,
    PresentedAlgebra, WeightVector,
};
use gradalg::grading::{contains_weight, homogeneity_system, solve_grading_cone};
use gradalg::exec::Execution;
use gradalg::{parse_poly, FieldSpec, Monomial, Poly, Ring};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn ring(field: FieldSpec) -> Arc<Ring> {
    Ring::new(field, ["x", "y", "z"]).unwrap()
}

fn poly(field: FieldSpec) -> impl Strategy<Value = Poly> {
    let term = ((0u32..4, 0u32..4, 0u32..3), -6i64..=6, 1i64..=3);
    prop::collection::vec(term, 0..5).prop_map(move |ts| {
        let r = ring(field);
        Poly::from_terms(
            &r,
            ts.into_iter().filter_map(|((a, b, c), n, d)| {
                field
                    .from_ratio(&n.into(), &d.into())
                    .map(|s| (Monomial::new(vec![a, b, c]), s))
            }),
        )
    })
}

fn ring_axioms(a: &Poly, b: &Poly, c: &Poly) -> Result<(), TestCaseError> {
    let r = a.ring();
    let zero = Poly::zero(r);
    let one = Poly::one(r);
    prop_assert_eq!(&(a + b), &(b + a));
    prop_assert_eq!(&(a * b), &(b * a));
    prop_assert_eq!(&(&(a + b) + c), &(a + &(b + c)));
    prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    prop_assert_eq!(&(a + &zero), a);
    prop_assert_eq!(&(a * &one), a);
    prop_assert!((a + &(-a)).is_zero());
    prop_assert!((a * &zero).is_zero());
    prop_assert_eq!(&(a - b), &(a + &(-b)));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms_q(a in poly(FieldSpec::Rationals), b in poly(FieldSpec::Rationals), c in poly(FieldSpec::Rationals)) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn ring_axioms_f5(a in poly(FieldSpec::prime(5).unwrap()), b in poly(FieldSpec::prime(5).unwrap()), c in poly(FieldSpec::prime(5).unwrap())) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn ring_axioms_f2(a in poly(FieldSpec::prime(2).unwrap()), b in poly(FieldSpec::prime(2).unwrap()), c in poly(FieldSpec::prime(2).unwrap())) {
        ring_axioms(&a, &b, &c)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(a in poly(FieldSpec::Rationals)) {
        let back = parse_poly(&a.to_string(), a.ring()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn print_parse_round_trip_fp(a in poly(FieldSpec::prime(7).unwrap())) {
        let back = parse_poly(&a.to_string(), a.ring()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz(a in poly(FieldSpec::Rationals), b in poly(FieldSpec::Rationals), i in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(i).unwrap();
        let rhs = &(&a.partial_derivative(i).unwrap() * &b) + &(&a * &b.partial_derivative(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn characteristic_kills_p_copies(a in poly(FieldSpec::prime(3).unwrap())) {
        let sum = &(&a + &a) + &a;
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn evaluation_is_a_morphism(a in poly(FieldSpec::Rationals), b in poly(FieldSpec::Rationals), p in prop::array::uniform3(-3i64..=3)) {
        let q = FieldSpec::Rationals;
        let pt: Vec<_> = p.iter().map(|&v| q.from_i64(v)).collect();
        let ev = |f: &Poly| f.evaluate(&pt).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }
}

fn b532() -> PresentedAlgebra {
    let r = ring(FieldSpec::Rationals);
    let rel = parse_poly("x^5 + y^3 + z^2", &r).unwrap();
    PresentedAlgebra::new(r, vec![rel], Some(vec![6, 10, 15].into())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_a_morphism(a in poly(FieldSpec::Rationals), b in poly(FieldSpec::Rationals)) {
        let alg = b532();
        let rs = alg.rewrite_system().unwrap();
        let na = normal_form(&a, rs);
        let nb = normal_form(&b, rs);
        prop_assert_eq!(&normal_form(&na, rs), &na);
        prop_assert_eq!(normal_form(&(&a + &b), rs), &na + &nb);
        prop_assert_eq!(normal_form(&(&a * &b), rs), normal_form(&(&na * &nb), rs));
        // a − NF(a) lies in the ideal: it vanishes on points of the surface.
        let q = FieldSpec::Rationals;
        let pt = [q.from_i64(-1), q.from_i64(1), q.zero()];
        prop_assert_eq!((&a - &na).evaluate(&pt).unwrap(), q.zero());
    }

    #[test]
    fn series_matches_enumeration(w in prop::collection::vec(1i64..6, 1..4), upto in 0i64..40) {
        let names: Vec<String> = (0..w.len()).map(|i| format!("v{i}")).collect();
        let alg = PresentedAlgebra::free(Ring::new(FieldSpec::Rationals, names).unwrap(), Some(w.into())).unwrap();
        let dims = hilbert_dims(&alg, upto, Execution::Sequential).unwrap();
        let series = hilbert_series_coefficients(&alg, upto).unwrap();
        prop_assert_eq!(dims.iter().map(|&d| d as i128).collect::<Vec<_>>(), series);
    }

    #[test]
    fn units_are_nonzero_constants(a in poly(FieldSpec::Rationals)) {
        let alg = b532();
        let red = alg.reduce(&a);
        prop_assert_eq!(is_unit(&red, &alg).unwrap(), !red.is_zero() && red.is_constant());
    }

    #[test]
    fn classification_symmetric_under_negation(w in prop::collection::vec(-5i64..=5, 1..5)) {
        let w = WeightVector::new(w);
        prop_assume!(!w.is_zero());
        let a = classify_action(&w).unwrap();
        let b = classify_action(&w.negated()).unwrap();
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.effective, b.effective);
    }

    #[test]
    fn random_bk_is_homogeneous_and_graded(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = common::random_bk(&mut rng, 4);
        prop_assert!(validate_bk(&d).is_valid());
        let g = canonical_grading(&d).unwrap();
        let alg = bk_algebra(&d).unwrap();
        for r in alg.relations() {
            prop_assert_eq!(homogeneity(r, &g.weights).unwrap(), Homogeneity::Homogeneous(g.n_total));
        }
        let cone = solve_grading_cone(&homogeneity_system(&alg)).unwrap();
        prop_assert!(contains_weight(&cone, &g.weights).unwrap());
        prop_assert!(cone.has_positive);
        let s = cone.sample_positive.clone().unwrap();
        prop_assert!(contains_weight(&cone, &s).unwrap());
        prop_assert_eq!(classify_action(&s).unwrap().kind, gradalg::graded::ActionKind::Elliptic);
    }

    #[test]
    fn same_class_is_an_equivalence(s1 in any::<u64>(), s2 in any::<u64>()) {
        let d1 = common::random_bk(&mut StdRng::seed_from_u64(s1), 3);
        let d2 = common::random_bk(&mut StdRng::seed_from_u64(s2), 3);
        prop_assert!(same_class(&d1, &d1));
        prop_assert_eq!(same_class(&d1, &d2), same_class(&d2, &d1));
        prop_assert_eq!(same_class(&d1, &d2), d1 == d2);
    }

    #[test]
    fn cone_ignores_coefficients(c1 in 1i64..9, c2 in -9i64..=-1, c3 in 1i64..9) {
        let r = Ring::new(FieldSpec::Rationals, ["x", "y", "z", "t"]).unwrap();
        let base = PresentedAlgebra::new(r.clone(), vec![parse_poly("x + x^2*y + z^2 + t^3", &r).unwrap()], None).unwrap();
        let scaled = parse_poly(&format!("{c1}*x {c2:+}*x^2*y + {c3}*z^2 + t^3"), &r).unwrap();
        let other = PresentedAlgebra::new(r, vec![scaled], None).unwrap();
        let a = solve_grading_cone(&homogeneity_system(&base)).unwrap();
        let b = solve_grading_cone(&homogeneity_system(&other)).unwrap();
        prop_assert_eq!(a.basis, b.basis);
        prop_assert_eq!(a.has_positive, b.has_positive);
    }

    #[test]
    fn tangent_dim_stable_under_rescaling(c in 1i64..9, p in prop::array::uniform4(-2i64..=2)) {
        let q = FieldSpec::Rationals;
        let r = Ring::new(q, ["x", "y", "z", "t"]).unwrap();
        let pt: Vec<_> = p.iter().map(|&v| q.from_i64(v)).collect();
        let free = PresentedAlgebra::free(r.clone(), None).unwrap();
        prop_assert_eq!(jacobian_tangent_dim(&free, &pt).unwrap().tangent_dim, 4);
        let rel = parse_poly("x + x^2*y + z^2 + t^3", &r).unwrap();
        let v = rel.evaluate(&pt).unwrap();
        let rel = &rel - &Poly::constant(&r, v);
        let a = PresentedAlgebra::new(r.clone(), vec![rel.clone()], None).unwrap();
        let b = PresentedAlgebra::new(r, vec![rel.scalar_mul(&q.from_i64(c))], None).unwrap();
        prop_assert_eq!(
            jacobian_tangent_dim(&a, &pt).unwrap().tangent_dim,
            jacobian_tangent_dim(&b, &pt).unwrap().tangent_dim
        );
    }
}
