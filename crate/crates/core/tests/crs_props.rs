use plucker_core::crs::{
    crs_class, crs_class_at, crs_class_interpolated, crs_class_peeling, crs_m_closed,
    euler_identity_check, leading_term, weighted_product_at,
};
use plucker_core::exactpoly::{int, MultiPoly, Var};
use plucker_core::symfunc::{divided_difference, schur_expand, Partition};
use proptest::prelude::*;

fn crs(parts: &[u32]) -> Partition {
    Partition::crs(parts.to_vec()).unwrap()
}

fn arb_crs_partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    let all = Partition::crs_up_to(max_weight);
    prop::sample::select(all)
}

#[test]
fn oracle_equivalence_up_to_ten() {
    for lambda in Partition::crs_up_to(10) {
        let w = lambda.weight() as i64;
        let class = crs_class(&lambda).unwrap();
        let step = (w / 4).max(1);
        for d0 in (0..5)
            .map(|t| w + t * step)
            .filter(|&d0| d0 <= 2 * w.max(1))
        {
            assert_eq!(
                class.evaluate_d(d0),
                crs_class_at(&lambda, d0).unwrap(),
                "{lambda} at d = {d0}"
            );
        }
    }
}

#[test]
fn interpolation_route_up_to_eight() {
    for lambda in Partition::crs_up_to(8) {
        let interpolated = crs_class_interpolated(&lambda).unwrap();
        assert_eq!(
            interpolated.coefficients(),
            crs_class(&lambda).unwrap().coefficients(),
            "{lambda}"
        );
    }
}

#[test]
fn closed_form_for_single_parts() {
    for m in 2..=12 {
        assert_eq!(
            crs_m_closed(m).unwrap().coefficients(),
            crs_class(&crs(&[m])).unwrap().coefficients(),
            "m = {m}"
        );
    }
}

#[test]
fn structural_invariants_up_to_ten() {
    for lambda in Partition::crs_up_to(10) {
        let v = crs_class(&lambda).unwrap().invariant_violations();
        assert!(v.is_empty(), "{lambda}: {v:?}");
    }
}

#[test]
fn peeling_any_part_up_to_eight() {
    for lambda in Partition::crs_up_to(8) {
        let reference = crs_class(&lambda).unwrap();
        for m in lambda.distinct_parts() {
            let peeled = crs_class_peeling(&lambda, m).unwrap();
            assert_eq!(
                peeled.coefficients(),
                reference.coefficients(),
                "{lambda} peeling {m}"
            );
        }
    }
}

#[test]
fn leading_slice_is_normalized_complete_product() {
    for lambda in Partition::crs_up_to(10) {
        let class = crs_class(&lambda).unwrap();
        assert_eq!(
            class.leading_slice(),
            leading_term(&lambda).unwrap(),
            "{lambda}"
        );
    }
}

#[test]
fn euler_class_is_single_part_class() {
    for d0 in 2..=9 {
        assert!(euler_identity_check(d0).unwrap(), "d0 = {d0}");
    }
}

#[test]
fn small_degrees_are_rejected() {
    assert!(crs_class_at(&crs(&[3, 2]), 4).is_err());
    assert!(Partition::crs(vec![3, 1]).is_err());
}

/// Independent oracle for single parts: the class is the divided difference
/// of `prod_{i<m} (i a + (d - i) b)` taken at an integer `d`.
#[test]
fn single_part_direct_divided_difference() {
    for m in 2..=8u32 {
        for d0 in m as i64..=2 * m as i64 {
            let e = schur_expand(&divided_difference(&weighted_product_at(m, d0)))
                .unwrap()
                .to_rational()
                .unwrap();
            assert_eq!(
                e,
                crs_class_at(&crs(&[m]), d0).unwrap(),
                "m = {m}, d = {d0}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evaluation_matches_integer_route(lambda in arb_crs_partition(9), extra in 0i64..12) {
        let d0 = lambda.weight() as i64 + extra;
        let class = crs_class(&lambda).unwrap();
        prop_assert_eq!(class.evaluate_d(d0), crs_class_at(&lambda, d0).unwrap());
    }

    #[test]
    fn class_is_homogeneous(lambda in arb_crs_partition(9)) {
        let roots = crs_class(&lambda).unwrap().to_roots();
        prop_assert!(roots.is_homogeneous_in(&[Var::A, Var::B]));
        if !roots.is_zero() {
            prop_assert_eq!(roots.total_degree_in(&[Var::A, Var::B]), Some(lambda.codim()));
        }
        prop_assert_eq!(roots.eval_var(Var::D, &int(0)).is_zero(), !lambda.is_empty());
        prop_assert!(roots != MultiPoly::zero());
    }
}
