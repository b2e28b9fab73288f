use num_bigint::BigUint;
use plucker_core::exactpoly::{int, rat, Monomial, MultiPoly, Rational, Var};
use plucker_core::symfunc::{
    binomial, catalan, chern_to_schur, complete_h_expand, divided_difference, kostka, riordan,
    schur_expand, schur_polynomial, schur_to_chern, schur_to_roots, stirling_first, Partition,
    SchurIndex,
};
use proptest::prelude::*;

fn arb_ab_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, 0u32..=5, 0u32..=5, 0u32..=2), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, i, j, e)| {
            (
                Monomial::from_pairs(&[(Var::A, i), (Var::B, j), (Var::D, e)]),
                int(c),
            )
        }))
    })
}

fn symmetrize(p: &MultiPoly) -> MultiPoly {
    p + &p.swap(Var::A, Var::B)
}

fn mono(i: u32, j: u32) -> MultiPoly {
    MultiPoly::monomial(1, &[(Var::A, i), (Var::B, j)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divided_difference_is_linear(p in arb_ab_poly(), q in arb_ab_poly(), c in -5i64..5) {
        let lhs = divided_difference(&(&p + &q.scale(&int(c))));
        let rhs = &divided_difference(&p) + &divided_difference(&q).scale(&int(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_commutes_with_symmetric_factors(p in arb_ab_poly(), s in arb_ab_poly()) {
        let s = symmetrize(&s);
        prop_assert_eq!(divided_difference(&(&s * &p)), &s * &divided_difference(&p));
    }

    #[test]
    fn divided_difference_is_swap_invariant(p in arb_ab_poly()) {
        let dp = divided_difference(&p);
        prop_assert_eq!(dp.swap(Var::A, Var::B), dp);
    }

    #[test]
    fn schur_round_trip(p in arb_ab_poly()) {
        let p = symmetrize(&p);
        let e = schur_expand(&p).unwrap();
        prop_assert_eq!(schur_to_roots(&e), p);
    }

    #[test]
    fn chern_round_trip(p in arb_ab_poly()) {
        let e = schur_expand(&symmetrize(&p)).unwrap();
        prop_assert_eq!(chern_to_schur(&schur_to_chern(&e)), e);
    }
}

#[test]
fn asymmetric_input_is_rejected() {
    assert!(schur_expand(&mono(2, 0)).is_err());
}

#[test]
fn straightening_table() {
    for m in 0..=12u32 {
        for i in 0..=m {
            let got = divided_difference(&mono(i, m - i));
            let expected = if 2 * i < m {
                schur_polynomial(SchurIndex::new(m - i - 1, i))
            } else if 2 * i > m {
                -schur_polynomial(SchurIndex::new(i - 1, m - i))
            } else {
                MultiPoly::zero()
            };
            assert_eq!(got, expected, "a^{i} b^{}", m - i);
        }
    }
}

#[test]
fn schur_polynomial_is_bialternant() {
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    for k in 0..8 {
        for l in 0..=k {
            let lhs = &schur_polynomial(SchurIndex::new(k, l)) * &(&a - &b);
            assert_eq!(lhs, &mono(k + 1, l) - &mono(l, k + 1));
        }
    }
}

#[test]
fn kostka_matches_complete_products() {
    for n in 0..=10 {
        for nu in Partition::all_of(n) {
            let h = complete_h_expand(nu.parts());
            for l in 0..=n / 2 {
                let mu = SchurIndex::new(n - l, l);
                let c = h.get(mu).cloned().unwrap_or_else(|| int(0));
                assert_eq!(c, int(kostka(mu, nu.parts()) as i64), "K[{mu}, {nu}]");
            }
        }
    }
}

/// `e_k(1, ..., m-1)` from the product `prod (1 + i t)`.
fn elementary_of_range(m: u32) -> Vec<BigUint> {
    let mut e = vec![BigUint::from(1u32)];
    for i in 1..m {
        let mut next = e.clone();
        next.push(BigUint::from(0u32));
        for k in 1..next.len() {
            next[k] += &e[k - 1] * BigUint::from(i);
        }
        e = next;
    }
    e
}

#[test]
fn stirling_numbers_are_elementary_symmetric() {
    for m in 1..=12 {
        let e = elementary_of_range(m);
        for k in 0..m {
            assert_eq!(
                stirling_first(m, m - k),
                e[k as usize],
                "stir({m}, {})",
                m - k
            );
        }
    }
}

#[test]
fn catalan_and_riordan() {
    for n in 0..15u32 {
        let c = binomial(2 * n as i64, n as i64) / (n + 1);
        assert_eq!(catalan(n), c.to_biguint().unwrap());
    }
    // R(n) = sum_k (-1)^(n-k) C(n, k) Catalan(k)
    for n in 0..15i64 {
        let mut s = num_bigint::BigInt::from(0);
        for k in 0..=n {
            let term = binomial(n, k) * num_bigint::BigInt::from(catalan(k as u32));
            if (n - k) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        assert_eq!(num_bigint::BigInt::from(riordan(n as u32)), s, "R({n})");
    }
}

#[test]
fn complete_products_of_small_content() {
    let h = complete_h_expand(&[1, 1]);
    let expected: Vec<(SchurIndex, Rational)> = vec![
        (SchurIndex::new(1, 1), rat(1, 1)),
        (SchurIndex::new(2, 0), rat(1, 1)),
    ];
    assert_eq!(
        h.iter().map(|(i, c)| (*i, c.clone())).collect::<Vec<_>>(),
        expected
    );
}
