use plucker_core::crs::crs_class;
use plucker_core::exactpoly::{int, Monomial, MultiPoly, Var};
use plucker_core::flagcalc::{
    flag_monomial, flex_point_locus_class, incidence_class, p_push, q_push,
    tangency_class_resolution, tangency_class_resolution_peeling, FlagClass,
};
use plucker_core::symfunc::{Partition, SchurExpansion, SchurIndex};
use proptest::prelude::*;

fn arb_flag_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, 0u32..=6, 0u32..=6, 0u32..=2), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, z, e, d)| {
            (
                Monomial::from_pairs(&[(Var::Zeta, z), (Var::Eta, e), (Var::D, d)]),
                int(c),
            )
        }))
    })
}

fn nonempty_up_to(n: u32) -> impl Iterator<Item = Partition> {
    Partition::crs_up_to(n)
        .into_iter()
        .filter(|p| !p.is_empty())
}

#[test]
fn pushforward_of_zeta_powers() {
    let sigma1 = &MultiPoly::var(Var::Zeta) + &MultiPoly::var(Var::Eta);
    for a in 1..=6u32 {
        let got = p_push(&FlagClass::new(flag_monomial(a, 0), None));
        let expected = SchurExpansion::from_terms([(SchurIndex::new(a - 1, 0), MultiPoly::one())]);
        assert_eq!(got.expansion(), &expected, "zeta^{a}");
        // sigma_1 comes out of the pushforward
        for b in 1..=2u32 {
            let f = FlagClass::new(&flag_monomial(a, 0) * &sigma1.pow(b), None);
            let lhs = p_push(&f);
            let rhs = plucker_core::symfunc::schur_expand_in(
                &(&plucker_core::symfunc::schur_polynomial_in(
                    SchurIndex::new(a - 1, 0),
                    Var::Zeta,
                    Var::Eta,
                ) * &sigma1.pow(b)),
                Var::Zeta,
                Var::Eta,
            )
            .unwrap();
            assert_eq!(lhs.expansion(), &rhs, "zeta^{a} sigma1^{b}");
        }
    }
    assert!(p_push(&FlagClass::new(MultiPoly::one(), None))
        .expansion()
        .is_empty());
}

#[test]
fn resolution_agrees_with_equivariant_route() {
    for lambda in nonempty_up_to(8) {
        let class = crs_class(&lambda).unwrap();
        let mut ns = vec![3, 4, 5, lambda.codim() + 2];
        ns.dedup();
        for n in ns {
            let res = tangency_class_resolution(&lambda, n).unwrap();
            assert_eq!(
                res.to_unipoly().unwrap(),
                class.truncate(n),
                "{lambda}, n = {n}"
            );
        }
    }
}

#[test]
fn resolution_peeling_independence() {
    for lambda in nonempty_up_to(8) {
        let n = lambda.codim() + 2;
        let reference = tangency_class_resolution(&lambda, n).unwrap();
        for m in lambda.distinct_parts() {
            let peeled = tangency_class_resolution_peeling(&lambda, m, n).unwrap();
            assert_eq!(peeled, reference, "{lambda} peeling {m}");
        }
    }
}

#[test]
fn incidence_classes_are_polynomial_up_to_nine() {
    for lambda in nonempty_up_to(9) {
        for m in lambda.distinct_parts() {
            incidence_class(&lambda, m).unwrap_or_else(|e| panic!("{lambda} at {m}: {e}"));
        }
    }
}

#[test]
fn point_loci_have_the_expected_degree() {
    // the incidence class has degree |lambda~| + 1 and q_! lowers it by n - 2
    for lambda in nonempty_up_to(7) {
        for n in 3..=lambda.codim() + 3 {
            for m in lambda.distinct_parts() {
                let p = flex_point_locus_class(&lambda, m, n).unwrap();
                for (mono, _) in p.poly().terms() {
                    assert_eq!(
                        mono.exp(Var::Zeta) + n,
                        lambda.codim() + 3,
                        "{lambda} at {m}"
                    );
                }
            }
        }
    }
}

#[test]
fn missing_ambient_is_an_error() {
    assert!(q_push(&FlagClass::new(flag_monomial(1, 1), None)).is_err());
    let lambda = Partition::crs(vec![3, 2]).unwrap();
    assert!(incidence_class(&lambda, 4).is_err());
    assert!(tangency_class_resolution(&lambda, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_push_is_linear(p in arb_flag_poly(), q in arb_flag_poly(), c in -4i64..4, n in 3u32..7) {
        let push = |x: &MultiPoly| q_push(&FlagClass::new(x.clone(), Some(n))).unwrap().poly().clone();
        let lhs = push(&(&p + &q.scale(&int(c))));
        let rhs = &push(&p) + &push(&q).scale(&int(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_push_respects_the_cutoff(p in arb_flag_poly(), n in 3u32..7) {
        let out = q_push(&FlagClass::new(p, Some(n))).unwrap();
        for (m, _) in out.poly().terms() {
            prop_assert!(m.exp(Var::Zeta) < n);
            prop_assert_eq!(m.exp(Var::Eta), 0);
        }
    }

    #[test]
    fn sigma_basis_round_trip(p in arb_flag_poly()) {
        let f = FlagClass::new(p.clone(), None);
        let back = FlagClass::from_sigma_basis(&f.to_sigma_basis(), None);
        prop_assert_eq!(back.poly(), &p);
    }

    #[test]
    fn p_push_is_linear(p in arb_flag_poly(), q in arb_flag_poly()) {
        let lhs = p_push(&FlagClass::new(&p + &q, None));
        let a = p_push(&FlagClass::new(p, None));
        let b = p_push(&FlagClass::new(q, None));
        let mut sum = a.expansion().clone().into_inner();
        for (i, c) in b.expansion().iter() {
            let e = sum.entry(*i).or_insert_with(MultiPoly::zero);
            *e = &*e + c;
        }
        sum.retain(|_, c| !c.is_zero());
        prop_assert_eq!(lhs.expansion(), &SchurExpansion::from_terms(sum));
    }
}
