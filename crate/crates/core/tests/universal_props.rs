use plucker_core::crs::crs_class;
use plucker_core::exactpoly::{int, Var};
use plucker_core::flagcalc::incidence_class;
use plucker_core::symfunc::{chern_to_roots, Partition};
use plucker_core::universal::{
    hilbert_degree, hilbert_degree_from_table, pencil_locus_class, pencil_slice, universal_class,
    universal_class_chern, universal_incidence_class,
};

fn nonempty_up_to(n: u32) -> impl Iterator<Item = Partition> {
    Partition::crs_up_to(n)
        .into_iter()
        .filter(|p| !p.is_empty())
}

#[test]
fn xi_zero_recovers_the_class() {
    for lambda in Partition::crs_up_to(10) {
        let u = universal_class(&lambda).unwrap();
        let at_zero = u.poly().eval_var(Var::Xi, &int(0));
        assert_eq!(at_zero, crs_class(&lambda).unwrap().to_roots(), "{lambda}");
    }
}

#[test]
fn xi_slices_are_symmetric_and_homogeneous() {
    for lambda in nonempty_up_to(9) {
        let u = universal_class(&lambda).unwrap();
        let codim = lambda.codim();
        assert_eq!(u.xi_degree(), codim, "{lambda}");
        for t in 0..=codim {
            let slice = u.poly().coefficient_of(Var::Xi, t);
            assert_eq!(slice.swap(Var::A, Var::B), slice, "{lambda}, xi^{t}");
            assert!(slice.is_homogeneous_in(&[Var::A, Var::B]));
            if !slice.is_zero() {
                assert_eq!(slice.total_degree_in(&[Var::A, Var::B]), Some(codim - t));
            }
            for (i, _) in u.xi_slice(t).iter() {
                assert_eq!(i.degree(), codim - t);
            }
        }
    }
}

#[test]
fn chern_form_matches_root_form() {
    for lambda in nonempty_up_to(8) {
        let chern = universal_class_chern(&lambda).unwrap();
        assert_eq!(
            chern_to_roots(&chern),
            *universal_class(&lambda).unwrap().poly(),
            "{lambda}"
        );
    }
}

#[test]
fn hilbert_degree_of_single_parts() {
    for m in 2..=10u32 {
        let lambda = Partition::crs(vec![m]).unwrap();
        let u = universal_class(&lambda).unwrap();
        let top = u
            .poly()
            .coefficient_of(Var::Xi, m - 1)
            .to_unipoly(Var::D)
            .unwrap();
        assert_eq!(hilbert_degree(&lambda).unwrap(), top, "m = {m}");
    }
}

#[test]
fn hilbert_degree_matches_table_oracle() {
    for lambda in nonempty_up_to(9) {
        assert_eq!(
            hilbert_degree(&lambda).unwrap(),
            hilbert_degree_from_table(&lambda).unwrap(),
            "{lambda}"
        );
    }
}

#[test]
fn universal_incidence_at_xi_zero() {
    for lambda in nonempty_up_to(8) {
        let n = lambda.codim() + 2;
        for m in lambda.distinct_parts() {
            let u = universal_incidence_class(&lambda, m, n).unwrap();
            let plain = incidence_class(&lambda, m).unwrap();
            assert_eq!(u.drop_xi().poly(), plain.poly(), "{lambda} at {m}");
        }
    }
}

#[test]
fn pencil_slice_is_linear_xi_coefficient() {
    let lambda = Partition::crs(vec![2, 2]).unwrap();
    let u = universal_incidence_class(&lambda, 2, 3).unwrap();
    let slice = pencil_slice(&lambda, 2, 3).unwrap();
    assert_eq!(slice.poly(), &u.poly().coefficient_of(Var::Xi, 1));
    let locus = pencil_locus_class(&lambda, 2, 3).unwrap();
    assert!(locus.poly().terms().all(|(m, _)| m.exp(Var::Zeta) == 1));
    assert!(!locus.poly().is_zero());
}
