//! Reference values from the classical literature, each recomputed by the
//! library. Used by the command-line `selftest` and by the test suite.

use std::fmt::Display;

use num_bigint::BigInt;

use crate::crs::{crs_class, crs_m_closed, leading_term, twist, weighted_product};
use crate::error::Result;
use crate::exactpoly::{rat, DFrac, FracPoly, MultiPoly, Rational, UniPoly, Var};
use crate::flagcalc::{
    flag_monomial, flex_point_locus_class, incidence_class, p_push, q_push,
    tangency_class_resolution, FlagClass,
};
use crate::plucker::{
    asymptotic_plucker, degree_table, hyperflex_count, lines_on_hypersurface, lowest_apl_vanishes,
    mflex_coefficient, plucker_point, plucker_table,
};
use crate::symfunc::{
    catalan, chern_to_roots, complete_h_expand, divided_difference, kostka, riordan, schur_expand,
    schur_to_chern, Partition, SchurExpansion, SchurIndex,
};
use crate::universal::{
    hilbert_degree, pencil_locus_class, pencil_slice, universal_class, universal_incidence_class,
};

/// One reference value with the library's answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCase {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Default)]
struct Corpus(Vec<GoldenCase>);

impl Corpus {
    fn check<T: PartialEq + Display>(&mut self, name: &str, expected: T, actual: Result<T>) {
        let (actual, passed) = match actual {
            Ok(a) => (a.to_string(), a == expected),
            Err(e) => (format!("error: {e}"), false),
        };
        self.0.push(GoldenCase {
            name: name.to_string(),
            expected: expected.to_string(),
            actual,
            passed,
        });
    }
}

/// Parses a polynomial written in the library's variable names.
pub fn poly(s: &str) -> MultiPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad reference expression {s:?}: {e}"))
}

/// Parses a polynomial in `d`.
pub fn dpoly(s: &str) -> UniPoly {
    poly(s)
        .to_unipoly(Var::D)
        .expect("reference polynomial in d")
}

/// Builds a Schur expansion from `(k, l, coefficient in d)` triples.
pub fn schur_d(entries: &[(u32, u32, &str)]) -> SchurExpansion<UniPoly> {
    SchurExpansion::from_terms(
        entries
            .iter()
            .map(|&(k, l, c)| (SchurIndex::new(k, l), dpoly(c))),
    )
}

fn schur_multi(entries: &[(u32, u32, &str)]) -> SchurExpansion<MultiPoly> {
    SchurExpansion::from_terms(
        entries
            .iter()
            .map(|&(k, l, c)| (SchurIndex::new(k, l), poly(c))),
    )
}

fn part(parts: &[u32]) -> Partition {
    Partition::crs(parts.to_vec()).expect("valid reference partition")
}

fn class_of(parts: &[u32]) -> Result<SchurExpansion<UniPoly>> {
    Ok(crs_class(&part(parts))?.coefficients().clone())
}

fn pl(parts: &[u32], i: u32) -> Result<UniPoly> {
    Ok(plucker_table(&part(parts))?
        .by_i(i)
        .cloned()
        .unwrap_or_else(UniPoly::zero))
}

/// Every reference value, recomputed.
pub fn golden_corpus() -> Vec<GoldenCase> {
    let mut c = Corpus::default();

    // exact algebra
    c.check(
        "twist of (d-2)(d-3)(a+b) by 2/(d-2)",
        poly("(d-3)*((d+2)*a+(d-2)*b)"),
        twist(
            &FracPoly::from_poly(poly("(d-2)*(d-3)*(a+b)")),
            &DFrac::ratio_over_shift(2, 2),
        )
        .to_multipoly("twist"),
    );
    c.check(
        "shift a, b by xi/d in d(d-1)(a+b)",
        poly("d*(d-1)*(a+b) + 2*(d-1)*xi"),
        universal_class(&part(&[2])).map(|u| u.poly().clone()),
    );

    // divided differences and Schur calculus
    c.check(
        "divided difference of d b (a + (d-1) b)",
        poly("d*(d-1)*(a+b)"),
        Ok(divided_difference(&poly("d*b*(a+(d-1)*b)"))),
    );
    c.check(
        "divided difference of a^3 b^3",
        MultiPoly::zero(),
        Ok(divided_difference(&poly("a^3*b^3"))),
    );
    c.check(
        "c1^2 - c2 is s[2]",
        schur_multi(&[(2, 0, "1")]),
        schur_expand(&chern_to_roots(&poly("c1^2 - c2"))),
    );
    c.check(
        "c2 is s[1,1]",
        schur_multi(&[(1, 1, "1")]),
        schur_expand(&chern_to_roots(&poly("c2"))),
    );
    let flex_roots = poly("d*(d-2)*(d-1)*(a^2+a*b+b^2) + 3*d*(d-2)*a*b");
    c.check(
        "flex class in the Schur basis",
        schur_multi(&[(2, 0, "d*(d-1)*(d-2)"), (1, 1, "3*d*(d-2)")]),
        schur_expand(&flex_roots),
    );
    c.check(
        "flex class in Chern classes",
        poly("d*(d-1)*(d-2)*c1^2 - d*(d-2)*(d-4)*c2"),
        schur_expand(&flex_roots).map(|e| schur_to_chern(&e)),
    );

    // combinatorial numbers
    c.check(
        "four lines in P^3: K[(2,2),(1,1,1,1)]",
        2,
        Ok(kostka(SchurIndex::new(2, 2), &[1, 1, 1, 1])),
    );
    c.check(
        "K[(3,2),(3,2)]",
        1,
        Ok(kostka(SchurIndex::new(3, 2), &[3, 2])),
    );
    c.check("Catalan C(2)", 2u32.into(), Ok(catalan(2)));
    c.check(
        "Riordan R(3..6)",
        "1 3 6 15".to_string(),
        Ok((3..=6)
            .map(|n| riordan(n).to_string())
            .collect::<Vec<_>>()
            .join(" ")),
    );
    c.check(
        "s[2,2] coefficient of h_(1,1,1,1)",
        Rational::from_integer(2.into()),
        Ok(complete_h_expand(&[1, 1, 1, 1])
            .get(SchurIndex::new(2, 2))
            .cloned()
            .unwrap_or_default()),
    );

    // stratum classes
    c.check(
        "class of (2)",
        schur_d(&[(1, 0, "d*(d-1)")]),
        class_of(&[2]),
    );
    c.check(
        "class of (3)",
        schur_d(&[(2, 0, "d*(d-1)*(d-2)"), (1, 1, "3*d*(d-2)")]),
        class_of(&[3]),
    );
    c.check(
        "class of (2,2)",
        schur_d(&[
            (2, 0, "1/2*d*(d-1)*(d-2)*(d-3)"),
            (1, 1, "1/2*d*(d-2)*(d-3)*(d+3)"),
        ]),
        class_of(&[2, 2]),
    );
    c.check(
        "single divided difference for m = 2",
        schur_d(&[(1, 0, "d*(d-1)")]),
        crs_m_closed(2).map(|x| x.coefficients().clone()),
    );
    c.check(
        "single divided difference for m = 3",
        schur_d(&[(2, 0, "d*(d-1)*(d-2)"), (1, 1, "3*d*(d-2)")]),
        crs_m_closed(3).map(|x| x.coefficients().clone()),
    );
    c.check(
        "leading term of (2,2)",
        SchurExpansion::from_terms([
            (SchurIndex::new(2, 0), rat(1, 2)),
            (SchurIndex::new(1, 1), rat(1, 2)),
        ]),
        leading_term(&part(&[2, 2])),
    );
    c.check(
        "leading term of (3) has no s[1,1]",
        SchurExpansion::from_terms([(SchurIndex::new(2, 0), rat(1, 1))]),
        leading_term(&part(&[3])),
    );

    // Plücker numbers
    c.check("degree of the dual curve", dpoly("d*(d-1)"), pl(&[2], 1));
    c.check("flexes of a plane curve", dpoly("3*d*(d-2)"), pl(&[3], 0));
    c.check(
        "flex lines through a point",
        dpoly("d*(d-1)*(d-2)"),
        pl(&[3], 2),
    );
    c.check(
        "bitangents",
        dpoly("1/2*d*(d-2)*(d-3)*(d+3)"),
        pl(&[2, 2], 0),
    );
    c.check(
        "bitangent lines through a point",
        dpoly("1/2*d*(d-1)*(d-2)*(d-3)"),
        pl(&[2, 2], 2),
    );
    c.check(
        "4-flex lines meeting a line",
        dpoly("2*d*(3*d-2)*(d-3)"),
        pl(&[4], 1),
    );
    c.check(
        "4-flex lines through a point",
        dpoly("d*(d-1)*(d-2)*(d-3)"),
        pl(&[4], 3),
    );
    c.check(
        "4-tangent lines",
        dpoly("1/12*d*(d-7)*(d-6)*(d-5)*(d-4)*(d^3+6*d^2+7*d-30)"),
        pl(&[2, 2, 2, 2], 0),
    );
    c.check(
        "lines through a point, (2,2)",
        dpoly("1/2*d*(d-1)*(d-2)*(d-3)"),
        plucker_point(&part(&[2, 2])),
    );
    c.check(
        "lines through a point, (5)",
        dpoly("d*(d-1)*(d-2)*(d-3)*(d-4)"),
        plucker_point(&part(&[5])),
    );
    c.check(
        "degrees for (10,2,2)",
        "14 14 14 13 12 11".to_string(),
        degree_table(&part(&[10, 2, 2])).map(|rows| {
            rows.iter()
                .map(|r| r.expected.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }),
    );
    c.check(
        "degrees for (2,2)",
        "4 4".to_string(),
        degree_table(&part(&[2, 2])).map(|rows| {
            rows.iter()
                .map(|r| r.expected.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }),
    );
    c.check(
        "asymptotic 4-tangents",
        rat(1, 12),
        asymptotic_plucker(&part(&[2, 2, 2, 2]), 2),
    );
    c.check(
        "asymptotic (3,3)",
        rat(1, 2),
        asymptotic_plucker(&part(&[3, 3]), 2),
    );
    c.check(
        "asymptotic (3,3,3)",
        rat(1, 6),
        asymptotic_plucker(&part(&[3, 3, 3]), 3),
    );
    c.check(
        "asymptotic (4) at i = 1",
        rat(0, 1),
        asymptotic_plucker(&part(&[4]), 1),
    );
    c.check(
        "asymptotic (4) vanishes",
        true,
        Ok(lowest_apl_vanishes(&part(&[4]))),
    );
    c.check(
        "m-flex coefficients m = 4, i = 1",
        "6 -22 12".to_string(),
        (1..4)
            .map(|k| mflex_coefficient(4, 1, k).map(|x| x.to_string()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.join(" ")),
    );
    c.check(
        "m-flex coefficient m = 3, i = 1, k = 1",
        BigInt::from(3),
        mflex_coefficient(3, 1, 1),
    );
    let hyper = [
        "9",
        "575",
        "99715",
        "33899229",
        "19134579541",
        "16213602794675",
        "19275975908850375",
    ];
    for (n, v) in (3..).zip(hyper) {
        c.check(
            &format!("hyperflexes for n = {n}"),
            v.parse::<BigInt>().expect("integer"),
            hyperflex_count(n),
        );
    }
    c.check(
        "lines on a cubic surface",
        BigInt::from(27),
        lines_on_hypersurface(3),
    );
    c.check(
        "lines on a quintic threefold",
        BigInt::from(2875),
        lines_on_hypersurface(4),
    );
    c.check(
        "flexes of a plane cubic",
        Rational::from_integer(9.into()),
        pl(&[3], 0).map(|p| p.eval_int(3)),
    );
    c.check(
        "flex lines of a plane cubic through a point",
        Rational::from_integer(6.into()),
        pl(&[3], 2).map(|p| p.eval_int(3)),
    );

    // flag manifold pushforwards
    let e2 = FlagClass::new(poly("d*zeta*((d-1)*zeta+eta)"), None);
    c.check(
        "pushforward of the tangency incidence class",
        schur_multi(&[(1, 0, "d*(d-1)")]),
        Ok(p_push(&e2).expansion().clone()),
    );
    let e3 = FlagClass::new(poly("d*zeta*((d-1)*zeta+eta)*((d-2)*zeta+2*eta)"), None);
    c.check(
        "pushforward of the flex incidence class",
        schur_multi(&[(2, 0, "d*(d-1)*(d-2)"), (1, 1, "3*d*(d-2)")]),
        Ok(p_push(&e3).expansion().clone()),
    );
    c.check(
        "q-pushforward of eta^2 on P^3",
        poly("1"),
        q_push(&FlagClass::new(flag_monomial(0, 2), Some(4))).map(|p| p.poly().clone()),
    );
    c.check(
        "q-pushforward of eta^3 on P^3",
        poly("-zeta"),
        q_push(&FlagClass::new(flag_monomial(0, 3), Some(4))).map(|p| p.poly().clone()),
    );
    c.check(
        "incidence class of bitangents",
        poly(
            "d*(d-3)*(d+2)*zeta*sigma1^2 + d*(d-3)*(d^2-8)*zeta^2*sigma1 - 4*d*(d-2)*(d-3)*zeta^3",
        ),
        incidence_class(&part(&[2, 2]), 2).map(|f| f.to_sigma_basis()),
    );
    c.check(
        "incidence class of (3,2) at the flex point",
        poly("d*zeta*((d-1)*zeta+eta)*((d-2)*zeta+2*eta)*(d-4)*((d-3)*zeta+(d+3)*eta)"),
        incidence_class(&part(&[3, 2]), 3).map(|f| f.poly().clone()),
    );
    c.check(
        "bitangents by resolution",
        schur_multi(&[
            (2, 0, "1/2*d*(d-1)*(d-2)*(d-3)"),
            (1, 1, "1/2*d*(d-2)*(d-3)*(d+3)"),
        ]),
        tangency_class_resolution(&part(&[2, 2]), 4).map(|g| g.expansion().clone()),
    );
    c.check(
        "tangent lines by resolution in the plane",
        schur_multi(&[(1, 0, "d*(d-1)")]),
        tangency_class_resolution(&part(&[2]), 3).map(|g| g.expansion().clone()),
    );
    c.check(
        "flex points of (3,2)-lines in P^3",
        poly("d*(d-4)*(3*d^2+5*d-24)*zeta^2"),
        flex_point_locus_class(&part(&[3, 2]), 3, 4).map(|p| p.poly().clone()),
    );
    c.check(
        "tangency points of (3,2)-lines in P^3",
        poly("d*(d-2)*(d-4)*(d^2+2*d+12)*zeta^2"),
        flex_point_locus_class(&part(&[3, 2]), 2, 4).map(|p| p.poly().clone()),
    );

    // linear systems
    c.check(
        "flex class over a linear system",
        poly("d*(d-2)*(d-1)*(a^2+a*b+b^2) + 3*d*(d-2)*a*b + 3*d*(d-2)*xi*(a+b) + 3*(d-2)*xi^2"),
        universal_class(&part(&[3])).map(|u| u.poly().clone()),
    );
    c.check(
        "degree of the flex locus of binary forms",
        dpoly("3*(d-2)"),
        hilbert_degree(&part(&[3])),
    );
    c.check(
        "degree of the discriminant",
        dpoly("2*(d-1)"),
        hilbert_degree(&part(&[2])),
    );
    c.check(
        "universal incidence class of bitangents",
        poly("(d*zeta+xi)*(eta+(d-1)*zeta+xi)*(d-3)*((d-2)*(eta+zeta)+2*xi+4*eta)"),
        universal_incidence_class(&part(&[2, 2]), 2, 3).map(|f| f.poly().clone()),
    );
    c.check(
        "pencil slice of bitangents",
        poly("(d+2)*(d-3)*eta^2 + 2*(d-3)*(d^2+3*d-2)*eta*zeta + (d-3)*(4*d^2-7*d+2)*zeta^2"),
        pencil_slice(&part(&[2, 2]), 2, 3).map(|f| f.poly().clone()),
    );
    c.check(
        "tangency points of bitangents in a pencil",
        poly("(d-3)*(2*d^2+5*d-6)*zeta"),
        pencil_locus_class(&part(&[2, 2]), 2, 3).map(|p| p.poly().clone()),
    );
    c.check(
        "weighted product for m = 2",
        poly("d*a*b + (d^2-d)*b^2"),
        Ok(weighted_product(2)),
    );

    c.0
}
