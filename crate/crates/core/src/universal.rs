//! Classes over a linear system of hypersurfaces. The extra variable `xi` is
//! `c_1` of the dual tautological line over the parameter space; the
//! universal class is the stratum class with roots shifted by `xi / d`.

use std::collections::HashMap;

use crate::crs::crs_class;
use crate::error::{Error, Result};
use crate::exactpoly::{FracPoly, MultiPoly, Rational, UniPoly, Var};
use crate::flagcalc::{q_push, FlagClass, ProjClass};
use crate::plucker::plucker_table;
use crate::symfunc::{schur_expand, schur_to_chern, Partition, SchurExpansion};

/// `[Y_lambda(d)]` over a linear system, as a polynomial in `a, b, xi, d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalClass {
    partition: Partition,
    poly: MultiPoly,
}

impl UniversalClass {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Coefficient of `xi^t` in the Schur basis.
    pub fn xi_slice(&self, t: u32) -> SchurExpansion<UniPoly> {
        schur_expand(&self.poly.coefficient_of(Var::Xi, t))
            .expect("each xi-slice is symmetric")
            .to_unipoly()
            .expect("coefficients depend on d only")
    }

    pub fn xi_degree(&self) -> u32 {
        self.poly.degree_in(Var::Xi).unwrap_or(0)
    }
}

fn xi_over_d() -> FracPoly {
    FracPoly::new(MultiPoly::var(Var::Xi), UniPoly::x()).expect("nonzero")
}

/// `[Y_lambda(d)]` with `a -> a + xi/d`, `b -> b + xi/d`.
pub fn universal_class(lambda: &Partition) -> Result<UniversalClass> {
    let class = crs_class(lambda)?;
    let shift = xi_over_d();
    let mut bind = HashMap::new();
    bind.insert(Var::A, &FracPoly::var(Var::A) + &shift);
    bind.insert(Var::B, &FracPoly::var(Var::B) + &shift);
    let f = FracPoly::from_poly(class.to_roots()).substitute(&bind);
    let poly = f.to_multipoly(&format!("universal class of {lambda}"))?;
    Ok(UniversalClass {
        partition: lambda.clone(),
        poly,
    })
}

/// The universal class in Chern form, by `c1 -> c1 + 2 xi/d` and
/// `c2 -> c2 + xi c1/d + xi^2/d^2`.
pub fn universal_class_chern(lambda: &Partition) -> Result<MultiPoly> {
    let class = crs_class(lambda)?;
    let chern = schur_to_chern(
        &class
            .coefficients()
            .map(|c| MultiPoly::from_unipoly(c, Var::D)),
    );
    let shift = xi_over_d();
    let c1 = FracPoly::var(Var::C1);
    let mut bind = HashMap::new();
    bind.insert(
        Var::C1,
        &c1 + &shift.scale(&Rational::from_integer(2.into())),
    );
    bind.insert(
        Var::C2,
        &(&FracPoly::var(Var::C2) + &(&shift * &c1)) + &(&shift * &shift),
    );
    FracPoly::from_poly(chern)
        .substitute(&bind)
        .to_multipoly(&format!("universal Chern class of {lambda}"))
}

/// The `xi^|lambda~|` coefficient: the degree of the projectivized stratum.
pub fn hilbert_degree(lambda: &Partition) -> Result<UniPoly> {
    let u = universal_class(lambda)?;
    Ok(u.poly
        .coefficient_of(Var::Xi, lambda.codim())
        .to_unipoly(Var::D)
        .expect("top xi coefficient depends on d only"))
}

/// The same degree from the Plücker table: setting `a = b = xi/d` turns
/// `s_{L-j,j}` into `(L - 2j + 1) (xi/d)^L`, so the degree is
/// `sum_j (L - 2j + 1) Pl_{lambda;L-2j} / d^L`.
pub fn hilbert_degree_from_table(lambda: &Partition) -> Result<UniPoly> {
    let table = plucker_table(lambda)?;
    let l = lambda.codim();
    let mut sum = UniPoly::zero();
    for e in table.entries() {
        let w = Rational::from_integer((l - 2 * e.j + 1).into());
        sum = &sum + &e.poly.scale(&w);
    }
    let dl = UniPoly::x().pow(l);
    sum.exact_div(&dl)
        .ok_or_else(|| Error::PolynomialityViolation {
            context: format!("Hilbert degree of {lambda}"),
            denominator: dl.to_string(),
        })
}

/// `prod_{i<m} ((d-i) zeta + i eta + xi)` times `[Y_{lambda'}(d-m)]` at
/// `a = eta + (xi + m eta)/(d-m)`, `b = zeta + (xi + m eta)/(d-m)`.
pub fn universal_incidence_class(lambda: &Partition, m: u32, n: u32) -> Result<FlagClass> {
    lambda.ensure_crs()?;
    let rest = lambda
        .without_part(m)
        .ok_or_else(|| Error::InvalidPartition(format!("{m} is not a part of {lambda}")))?;
    let prev = crs_class(&rest)?;
    let mi = m as i64;
    let dm = UniPoly::linear_root(mi);
    let shift = FracPoly::new(
        &MultiPoly::var(Var::Xi) + &MultiPoly::monomial(mi, &[(Var::Eta, 1)]),
        dm.clone(),
    )?;
    let mut bind = HashMap::new();
    bind.insert(
        Var::D,
        FracPoly::from_poly(MultiPoly::from_unipoly(&dm, Var::D)),
    );
    bind.insert(Var::A, &FracPoly::var(Var::Eta) + &shift);
    bind.insert(Var::B, &FracPoly::var(Var::Zeta) + &shift);
    let twisted = FracPoly::from_poly(prev.to_roots()).substitute(&bind);
    let poly = twisted
        .mul_poly(&euler_with_xi(m))
        .to_multipoly(&format!("universal incidence class of {lambda} at {m}"))?;
    Ok(FlagClass::new(poly, Some(n)))
}

/// `prod_{i<m} ((d-i) zeta + i eta + xi)`.
fn euler_with_xi(m: u32) -> MultiPoly {
    let zeta = MultiPoly::var(Var::Zeta);
    let eta = MultiPoly::var(Var::Eta);
    let xi = MultiPoly::var(Var::Xi);
    let d = MultiPoly::var(Var::D);
    (0..m as i64).fold(MultiPoly::one(), |acc, i| {
        let dz = &(&d - &MultiPoly::from_int(i)) * &zeta;
        let factor = &(&dz + &eta.scale(&Rational::from_integer(i.into()))) + &xi;
        &acc * &factor
    })
}

/// The `xi^1` coefficient of the universal incidence class: the pencil slice.
pub fn pencil_slice(lambda: &Partition, m: u32, n: u32) -> Result<FlagClass> {
    let u = universal_incidence_class(lambda, m, n)?;
    Ok(FlagClass::new(u.poly().coefficient_of(Var::Xi, 1), Some(n)))
}

/// Class in `P(C^n)` of the contact points of `lambda`-lines of the members
/// of a generic pencil.
pub fn pencil_locus_class(lambda: &Partition, m: u32, n: u32) -> Result<ProjClass> {
    q_push(&pencil_slice(lambda, m, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use crate::symfunc::chern_to_roots;

    fn p(parts: &[u32]) -> Partition {
        Partition::crs(parts.to_vec()).unwrap()
    }

    #[test]
    fn tangent_class_over_a_linear_system() {
        let u = universal_class(&p(&[2])).unwrap();
        // d(d-1)(a+b) + 2(d-1) xi
        let expected = &(&MultiPoly::from_unipoly(&UniPoly::from_roots(int(1), &[0, 1]), Var::D)
            * &(&MultiPoly::var(Var::A) + &MultiPoly::var(Var::B)))
            + &(&MultiPoly::from_unipoly(&UniPoly::from_roots(int(2), &[1]), Var::D)
                * &MultiPoly::var(Var::Xi));
        assert_eq!(u.poly(), &expected);
        assert_eq!(
            hilbert_degree(&p(&[2])).unwrap(),
            UniPoly::from_roots(int(2), &[1])
        );
        assert_eq!(
            hilbert_degree(&p(&[3])).unwrap(),
            UniPoly::from_roots(int(3), &[2])
        );
    }

    #[test]
    fn chern_and_root_forms_agree() {
        for lambda in Partition::crs_up_to(6) {
            let u = universal_class(&lambda).unwrap();
            assert_eq!(
                chern_to_roots(&universal_class_chern(&lambda).unwrap()),
                *u.poly()
            );
        }
    }

    #[test]
    fn hilbert_degree_oracle() {
        for lambda in Partition::crs_up_to(7) {
            assert_eq!(
                hilbert_degree(&lambda).unwrap(),
                hilbert_degree_from_table(&lambda).unwrap(),
                "{lambda}"
            );
        }
    }

    #[test]
    fn single_part_universal_incidence() {
        let u = universal_incidence_class(&p(&[3]), 3, 4).unwrap();
        assert_eq!(u.poly(), &euler_with_xi(3));
    }
}
