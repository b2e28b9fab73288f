//! Classes on the partial flag manifold `Fl_{1,2}(C^n)` and their pushforwards
//! to `Gr_2(C^n)` and `P(C^n)`.
//!
//! A class is a polynomial in `zeta = c_1((S^1)^v)` and `eta = sigma_1 - zeta`
//! with scalars in `Q[d]` (and possibly `xi`). Relations of the target are
//! imposed only when pushing forward: Schur truncation `k <= n - 2` on the
//! Grassmannian and `zeta^n = 0` on projective space.

use std::collections::HashMap;
use std::fmt;

use crate::crs::{crs_class, twisted_numerator, weighted_product};
use crate::error::{Error, Result};
use crate::exactpoly::{FracPoly, Monomial, MultiPoly, Rational, UniPoly, Var};
use crate::symfunc::{divided_difference_in, schur_expand_in, Partition, SchurExpansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagClass {
    poly: MultiPoly,
    ambient_n: Option<u32>,
}

impl FlagClass {
    pub fn new(poly: MultiPoly, ambient_n: Option<u32>) -> Self {
        Self { poly, ambient_n }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ambient_n(&self) -> Option<u32> {
        self.ambient_n
    }

    pub fn with_ambient(mut self, n: u32) -> Self {
        self.ambient_n = Some(n);
        self
    }

    /// The class written in `zeta, sigma_1` via `eta = sigma_1 - zeta`.
    pub fn to_sigma_basis(&self) -> MultiPoly {
        let mut bind = HashMap::new();
        bind.insert(
            Var::Eta,
            &MultiPoly::var(Var::Sigma1) - &MultiPoly::var(Var::Zeta),
        );
        self.poly.substitute(&bind)
    }

    /// Inverse of [`FlagClass::to_sigma_basis`].
    pub fn from_sigma_basis(p: &MultiPoly, ambient_n: Option<u32>) -> Self {
        let mut bind = HashMap::new();
        bind.insert(
            Var::Sigma1,
            &MultiPoly::var(Var::Zeta) + &MultiPoly::var(Var::Eta),
        );
        Self::new(p.substitute(&bind), ambient_n)
    }

    /// Specializes `xi = 0`.
    pub fn drop_xi(&self) -> Self {
        Self::new(self.poly.coefficient_of(Var::Xi, 0), self.ambient_n)
    }
}

impl fmt::Display for FlagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// A class on `Gr_2(C^n)` in the Schur basis; coefficients may carry `d` and `xi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassClass {
    expansion: SchurExpansion<MultiPoly>,
    ambient_n: Option<u32>,
}

impl GrassClass {
    /// Applies the truncation `s_{k,l} = 0` for `k > n - 2` when `n` is known.
    pub fn new(expansion: SchurExpansion<MultiPoly>, ambient_n: Option<u32>) -> Self {
        let expansion = match ambient_n {
            Some(n) => expansion.filter(|i| i.k + 2 <= n),
            None => expansion,
        };
        Self {
            expansion,
            ambient_n,
        }
    }

    pub fn expansion(&self) -> &SchurExpansion<MultiPoly> {
        &self.expansion
    }

    pub fn ambient_n(&self) -> Option<u32> {
        self.ambient_n
    }

    /// Coefficients as polynomials in `d`, when no other variable occurs.
    pub fn to_unipoly(&self) -> Option<SchurExpansion<UniPoly>> {
        self.expansion.to_unipoly()
    }
}

impl fmt::Display for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expansion)
    }
}

/// A class on `P(C^n)`: a polynomial in `zeta` of degree below `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjClass {
    poly: MultiPoly,
    ambient_n: u32,
}

impl ProjClass {
    /// Reduces modulo `zeta^n`.
    pub fn new(poly: MultiPoly, ambient_n: u32) -> Self {
        let poly = MultiPoly::from_terms(
            poly.terms()
                .filter(|(m, _)| m.exp(Var::Zeta) < ambient_n)
                .map(|(m, c)| (*m, c.clone())),
        );
        Self { poly, ambient_n }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ambient_n(&self) -> u32 {
        self.ambient_n
    }

    /// Coefficient of `zeta^k`, in the remaining variables.
    pub fn coefficient(&self, k: u32) -> MultiPoly {
        self.poly.coefficient_of(Var::Zeta, k)
    }

    /// Coefficient of `zeta^k` as a polynomial in `d`.
    pub fn coefficient_d(&self, k: u32) -> Option<UniPoly> {
        self.coefficient(k).to_unipoly(Var::D)
    }
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `(q(zeta, eta) - q(eta, zeta)) / (zeta - eta)`; sends `zeta` to `1`.
pub fn flag_divided_difference(q: &MultiPoly) -> MultiPoly {
    divided_difference_in(q, Var::Eta, Var::Zeta)
}

/// Pushforward along `Fl_{1,2}(C^n) -> Gr_2(C^n)`.
pub fn p_push(f: &FlagClass) -> GrassClass {
    let dd = flag_divided_difference(&f.poly);
    let e = schur_expand_in(&dd, Var::Zeta, Var::Eta).expect("divided differences are symmetric");
    GrassClass::new(e, f.ambient_n)
}

/// Pushforward along `Fl_{1,2}(C^n) -> P(C^n)`:
/// `eta^a zeta^b -> s_{a-n+2} zeta^b` with `s_0 = 1`, `s_1 = -zeta` and all
/// other `s_j = 0`, then `zeta^n = 0`.
pub fn q_push(f: &FlagClass) -> Result<ProjClass> {
    let n = f.ambient_n.ok_or(Error::MissingAmbient)?;
    let mut out = MultiPoly::zero();
    for (m, c) in f.poly.terms() {
        let j = m.exp(Var::Eta) as i64 + 2 - n as i64;
        let base = m.with(Var::Eta, 0);
        match j {
            0 => out.add_term(base, c.clone()),
            1 => out.add_term(base.with(Var::Zeta, base.exp(Var::Zeta) + 1), -c),
            _ => {}
        }
    }
    Ok(ProjClass::new(out, n))
}

/// Numerator and `d`-denominator of the incidence class of `m`-fold contact
/// points on `lambda`-lines, with `a = eta`, `b = zeta`.
fn incidence_parts(lambda: &Partition, m: u32) -> Result<(MultiPoly, UniPoly, u32)> {
    lambda.ensure_crs()?;
    let rest = lambda
        .without_part(m)
        .ok_or_else(|| Error::InvalidPartition(format!("{m} is not a part of {lambda}")))?;
    let prev = crs_class(&rest)?;
    let num = &twisted_numerator(&prev.to_roots(), m) * &weighted_product(m);
    let num = num.rename(Var::A, Var::Eta).rename(Var::B, Var::Zeta);
    let den = UniPoly::linear_root(m as i64).pow(rest.codim());
    Ok((num, den, lambda.multiplicity(m)))
}

/// `e(V/E) [Y_{lambda'}(E)]` with `e(V/E) = prod_{i<m} ((d-i) zeta + i eta)`
/// and `[Y_{lambda'}(d-m)]` evaluated at `a = eta + m eta/(d-m)`,
/// `b = zeta + m eta/(d-m)`.
pub fn incidence_class(lambda: &Partition, m: u32) -> Result<FlagClass> {
    let (num, den, _) = incidence_parts(lambda, m)?;
    let f = FracPoly::new(num, den)?;
    let poly = f.to_multipoly(&format!("incidence class of {lambda} at {m}"))?;
    Ok(FlagClass::new(poly, None))
}

/// `(1/e_m) p_!` of the incidence class, peeling the largest part.
pub fn tangency_class_resolution(lambda: &Partition, n: u32) -> Result<GrassClass> {
    let m = lambda
        .largest()
        .ok_or_else(|| Error::InvalidPartition("the empty partition has no lines".into()))?;
    tangency_class_resolution_peeling(lambda, m, n)
}

/// `(1/e_m) p_!` of the incidence class for the part `m`.
pub fn tangency_class_resolution_peeling(lambda: &Partition, m: u32, n: u32) -> Result<GrassClass> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let (num, den, e_m) = incidence_parts(lambda, m)?;
    let pushed = flag_divided_difference(&num).scale(&Rational::new(1.into(), e_m.into()));
    let poly = pushed
        .exact_div_d(&den)
        .ok_or_else(|| Error::PolynomialityViolation {
            context: format!("resolution class of {lambda}"),
            denominator: den.to_string(),
        })?;
    let e = schur_expand_in(&poly, Var::Zeta, Var::Eta)?;
    Ok(GrassClass::new(e, Some(n)))
}

/// Class in `P(C^n)` of the points of `m`-fold contact on `lambda`-lines.
pub fn flex_point_locus_class(lambda: &Partition, m: u32, n: u32) -> Result<ProjClass> {
    q_push(&incidence_class(lambda, m)?.with_ambient(n))
}

/// `zeta^a eta^b` as a class.
pub fn flag_monomial(zeta: u32, eta: u32) -> MultiPoly {
    MultiPoly::term(
        Rational::from_integer(1.into()),
        Monomial::from_pairs(&[(Var::Zeta, zeta), (Var::Eta, eta)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use crate::symfunc::SchurIndex;

    fn p(parts: &[u32]) -> Partition {
        Partition::crs(parts.to_vec()).unwrap()
    }

    fn dpoly(c: Rational, roots: &[i64]) -> MultiPoly {
        MultiPoly::from_unipoly(&UniPoly::from_roots(c, roots), Var::D)
    }

    #[test]
    fn sign_anchor() {
        let g = p_push(&FlagClass::new(MultiPoly::var(Var::Zeta), None));
        assert_eq!(
            g.expansion().get(SchurIndex::new(0, 0)),
            Some(&MultiPoly::one())
        );
        assert!(p_push(&FlagClass::new(MultiPoly::one(), None))
            .expansion()
            .is_empty());
        for a in 1..=6 {
            let g = p_push(&FlagClass::new(flag_monomial(a, 0), None));
            assert_eq!(g.expansion().len(), 1);
            assert_eq!(
                g.expansion().get(SchurIndex::new(a - 1, 0)),
                Some(&MultiPoly::one())
            );
        }
    }

    #[test]
    fn q_push_rule() {
        let f = |a| FlagClass::new(flag_monomial(0, a), Some(4));
        assert_eq!(q_push(&f(2)).unwrap().poly(), &MultiPoly::one());
        assert_eq!(q_push(&f(3)).unwrap().poly(), &-MultiPoly::var(Var::Zeta));
        assert!(q_push(&f(4)).unwrap().poly().is_zero());
        assert_eq!(
            q_push(&FlagClass::new(MultiPoly::one(), None)),
            Err(Error::MissingAmbient)
        );
        let high = FlagClass::new(flag_monomial(4, 2), Some(4));
        assert!(q_push(&high).unwrap().poly().is_zero());
    }

    #[test]
    fn tangent_line_pushforward() {
        let g = tangency_class_resolution(&p(&[2]), 3).unwrap();
        assert_eq!(
            g.expansion().get(SchurIndex::new(1, 0)),
            Some(&dpoly(int(1), &[0, 1]))
        );
        let g = tangency_class_resolution(&p(&[3]), 3).unwrap();
        assert_eq!(g.expansion().len(), 1);
        assert_eq!(
            g.expansion().get(SchurIndex::new(1, 1)),
            Some(&dpoly(int(3), &[0, 2]))
        );
    }

    #[test]
    fn incidence_of_single_part() {
        let f = incidence_class(&p(&[3]), 3).unwrap();
        let e = weighted_product(3)
            .rename(Var::A, Var::Eta)
            .rename(Var::B, Var::Zeta);
        assert_eq!(f.poly(), &e);
        let back = FlagClass::from_sigma_basis(&f.to_sigma_basis(), None);
        assert_eq!(back, f);
    }

    #[test]
    fn tangency_point_locus_of_plane_curve() {
        // every point of the curve is a tangency point: the class is d zeta
        let c = flex_point_locus_class(&p(&[2]), 2, 3).unwrap();
        assert_eq!(c.coefficient_d(1), Some(UniPoly::from_ints(&[0, 1])));
        assert_eq!(c.poly().len(), 1);
    }
}
