use std::collections::HashMap;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, MultiPoly, Rational, UniPoly, Var};

/// Two-row Schur index `s_{k,l}` with `k >= l >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchurIndex {
    pub k: u32,
    pub l: u32,
}

impl SchurIndex {
    pub fn new(k: u32, l: u32) -> Self {
        assert!(k >= l, "Schur index requires k >= l, got ({k},{l})");
        Self { k, l }
    }

    pub fn degree(&self) -> u32 {
        self.k + self.l
    }
}

impl fmt::Display for SchurIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.l == 0 {
            write!(f, "s[{}]", self.k)
        } else {
            write!(f, "s[{},{}]", self.k, self.l)
        }
    }
}

/// Finite linear combination of two-variable Schur polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion<C> {
    terms: BTreeMap<SchurIndex, C>,
}

impl<C> Default for SchurExpansion<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C> SchurExpansion<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(it: impl IntoIterator<Item = (SchurIndex, C)>) -> Self {
        Self {
            terms: it.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, idx: SchurIndex, c: C) {
        self.terms.insert(idx, c);
    }

    pub fn get(&self, idx: SchurIndex) -> Option<&C> {
        self.terms.get(&idx)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&SchurIndex, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> SchurExpansion<D> {
        SchurExpansion {
            terms: self.terms.iter().map(|(i, c)| (*i, f(c))).collect(),
        }
    }

    /// Keeps the indices allowed by `keep`.
    pub fn filter(&self, keep: impl Fn(&SchurIndex) -> bool) -> Self
    where
        C: Clone,
    {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        }
    }

    pub fn into_inner(self) -> BTreeMap<SchurIndex, C> {
        self.terms
    }
}

impl SchurExpansion<MultiPoly> {
    /// Coefficients as constants, when no other variable occurs.
    pub fn to_rational(&self) -> Option<SchurExpansion<Rational>> {
        let mut out = SchurExpansion::new();
        for (i, c) in &self.terms {
            out.insert(*i, c.as_constant()?);
        }
        Some(out)
    }

    /// Coefficients as polynomials in `d`, when only `d` occurs.
    pub fn to_unipoly(&self) -> Option<SchurExpansion<UniPoly>> {
        let mut out = SchurExpansion::new();
        for (i, c) in &self.terms {
            out.insert(*i, c.to_unipoly(Var::D)?);
        }
        Some(out)
    }
}

impl<C: fmt::Display> fmt::Display for SchurExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{i}")?;
        }
        Ok(())
    }
}

/// `(p(a,b) - p(b,a)) / (b - a)`.
pub fn divided_difference(p: &MultiPoly) -> MultiPoly {
    divided_difference_in(p, Var::A, Var::B)
}

/// `(p(x,y) - p(y,x)) / (y - x)`, computed monomial by monomial.
///
/// Variables other than `x`, `y` are scalars.
pub fn divided_difference_in(p: &MultiPoly, x: Var, y: Var) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let i = m.exp(x);
        let j = m.exp(y);
        if i == j {
            continue;
        }
        let (lo, hi, c) = if j > i { (i, j, c.clone()) } else { (j, i, -c) };
        // x^lo y^lo h_{hi-lo-1}(x, y)
        for t in 0..(hi - lo) {
            let nm = m.with(x, lo + t).with(y, hi - 1 - t);
            out.add_term(nm, c.clone());
        }
    }
    out
}

/// `h_n(x, y)`, the complete homogeneous symmetric polynomial.
pub fn complete_h_in(n: u32, x: Var, y: Var) -> MultiPoly {
    MultiPoly::from_terms((0..=n).map(|i| {
        (
            Monomial::from_pairs(&[(x, i), (y, n - i)]),
            Rational::from_integer(1.into()),
        )
    }))
}

/// `s_{k,l}(x, y) = (xy)^l h_{k-l}(x, y)`.
pub fn schur_polynomial_in(idx: SchurIndex, x: Var, y: Var) -> MultiPoly {
    complete_h_in(idx.k - idx.l, x, y)
        .mul_monomial(&Monomial::from_pairs(&[(x, idx.l), (y, idx.l)]))
}

pub fn schur_polynomial(idx: SchurIndex) -> MultiPoly {
    schur_polynomial_in(idx, Var::A, Var::B)
}

/// Expands a polynomial symmetric in `a, b` in the Schur basis.
pub fn schur_expand(p: &MultiPoly) -> Result<SchurExpansion<MultiPoly>> {
    schur_expand_in(p, Var::A, Var::B)
}

/// Expands a polynomial symmetric in `x, y` in the Schur basis; the
/// coefficients carry every other variable.
///
/// Within total degree `n`, the monomial `x^k y^l` (`k >= l`) occurs exactly
/// in `s_{k',n-k'}` for `k' >= k`, so the coefficient of `s_{k,l}` is
/// `[x^k y^l] - [x^(k+1) y^(l-1)]`.
pub fn schur_expand_in(p: &MultiPoly, x: Var, y: Var) -> Result<SchurExpansion<MultiPoly>> {
    if p.swap(x, y) != *p {
        return Err(Error::NotSymmetric(x.symbol(), y.symbol()));
    }
    let groups = p.collect_in(&[x, y]);
    // s_{k,l} is touched by x^k y^l and by x^(k+1) y^(l-1)
    let mut indices = BTreeSet::new();
    for m in groups.keys() {
        let (k, l) = (m.exp(x), m.exp(y));
        if k >= l {
            indices.insert((k, l));
            if k >= l + 2 {
                indices.insert((k - 1, l + 1));
            }
        }
    }
    let mut out = SchurExpansion::new();
    for (k, l) in indices {
        let here = Monomial::from_pairs(&[(x, k), (y, l)]);
        let mut coef = groups.get(&here).cloned().unwrap_or_else(MultiPoly::zero);
        if l > 0 {
            let next = Monomial::from_pairs(&[(x, k + 1), (y, l - 1)]);
            if let Some(c2) = groups.get(&next) {
                coef -= c2;
            }
        }
        if !coef.is_zero() {
            out.insert(SchurIndex::new(k, l), coef);
        }
    }
    Ok(out)
}

/// Inverse of [`schur_expand_in`].
pub fn schur_to_roots_in(e: &SchurExpansion<MultiPoly>, x: Var, y: Var) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (i, c) in e.iter() {
        out += &(c * &schur_polynomial_in(*i, x, y));
    }
    out
}

pub fn schur_to_roots(e: &SchurExpansion<MultiPoly>) -> MultiPoly {
    schur_to_roots_in(e, Var::A, Var::B)
}

/// `h_n` written in `c1 = a + b`, `c2 = ab`: `h_n = c1 h_{n-1} - c2 h_{n-2}`.
fn complete_h_chern(n: u32) -> MultiPoly {
    let c1 = MultiPoly::var(Var::C1);
    let c2 = MultiPoly::var(Var::C2);
    let mut prev = MultiPoly::zero();
    let mut cur = MultiPoly::one();
    for _ in 0..n {
        let next = &(&c1 * &cur) - &(&c2 * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Rewrites a Schur expansion in the Chern classes `c1, c2`.
pub fn schur_to_chern(e: &SchurExpansion<MultiPoly>) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (i, c) in e.iter() {
        let s = complete_h_chern(i.k - i.l).mul_monomial(&Monomial::from_pairs(&[(Var::C2, i.l)]));
        out += &(c * &s);
    }
    out
}

/// Substitutes `c1 = a + b`, `c2 = ab`.
pub fn chern_to_roots(p: &MultiPoly) -> MultiPoly {
    let mut bind = HashMap::new();
    bind.insert(Var::C1, &MultiPoly::var(Var::A) + &MultiPoly::var(Var::B));
    bind.insert(Var::C2, MultiPoly::monomial(1, &[(Var::A, 1), (Var::B, 1)]));
    p.substitute(&bind)
}

pub fn chern_to_schur(p: &MultiPoly) -> SchurExpansion<MultiPoly> {
    schur_expand(&chern_to_roots(p)).expect("polynomials in c1, c2 are symmetric")
}

/// `h_nu(a, b) = prod h_{nu_i}(a, b)` in the Schur basis.
pub fn complete_h_expand(nu: &[u32]) -> SchurExpansion<Rational> {
    let prod = nu.iter().fold(MultiPoly::one(), |acc, &n| {
        &acc * &complete_h_in(n, Var::A, Var::B)
    });
    schur_expand(&prod)
        .expect("products of complete polynomials are symmetric")
        .to_rational()
        .expect("numeric coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;

    fn a() -> MultiPoly {
        MultiPoly::var(Var::A)
    }
    fn b() -> MultiPoly {
        MultiPoly::var(Var::B)
    }
    fn d_poly(c: i64, roots: &[i64]) -> MultiPoly {
        MultiPoly::from_unipoly(&UniPoly::from_roots(int(c), roots), Var::D)
    }

    #[test]
    fn divided_difference_examples() {
        // d b (a + (d-1) b) -> d(d-1)(a+b)
        let d = MultiPoly::var(Var::D);
        let p = &(&d * &b()) * &(&a() + &(&(&d - &MultiPoly::one()) * &b()));
        assert_eq!(divided_difference(&p), &d_poly(1, &[0, 1]) * &(&a() + &b()));
        for i in 0..5 {
            let sym = MultiPoly::monomial(1, &[(Var::A, i), (Var::B, i)]);
            assert!(divided_difference(&sym).is_zero());
        }
        assert_eq!(
            divided_difference(&MultiPoly::monomial(1, &[(Var::B, 2)])),
            &a() + &b()
        );
    }

    #[test]
    fn expand_basics() {
        let s2 = MultiPoly::monomial(1, &[(Var::A, 2)])
            + MultiPoly::monomial(1, &[(Var::A, 1), (Var::B, 1)])
            + MultiPoly::monomial(1, &[(Var::B, 2)]);
        let e = schur_expand(&s2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(SchurIndex::new(2, 0)), Some(&MultiPoly::one()));

        let ab = MultiPoly::monomial(1, &[(Var::A, 1), (Var::B, 1)]);
        let c1sq_minus_c2 = &(&a() + &b()).pow(2) - &ab;
        assert_eq!(
            schur_expand(&c1sq_minus_c2).unwrap(),
            schur_expand(&s2).unwrap()
        );
        let e = schur_expand(&ab).unwrap();
        assert_eq!(e.get(SchurIndex::new(1, 1)), Some(&MultiPoly::one()));
    }

    #[test]
    fn flex_class_expansion() {
        let s2 = schur_polynomial(SchurIndex::new(2, 0));
        let ab = schur_polynomial(SchurIndex::new(1, 1));
        let p = &(&d_poly(1, &[0, 1, 2]) * &s2) + &(&d_poly(3, &[0, 2]) * &ab);
        let e = schur_expand(&p).unwrap();
        assert_eq!(e.get(SchurIndex::new(2, 0)), Some(&d_poly(1, &[0, 1, 2])));
        assert_eq!(e.get(SchurIndex::new(1, 1)), Some(&d_poly(3, &[0, 2])));

        // d(d-1)(d-2) c1^2 - d(d-2)(d-4) c2
        let chern = schur_to_chern(&e);
        let expected = &(&d_poly(1, &[0, 1, 2]) * &MultiPoly::monomial(1, &[(Var::C1, 2)]))
            - &(&d_poly(1, &[0, 2, 4]) * &MultiPoly::var(Var::C2));
        assert_eq!(chern, expected);
        assert_eq!(chern_to_schur(&chern), e);
    }

    #[test]
    fn chern_small_cases() {
        let e = SchurExpansion::from_terms([(SchurIndex::new(1, 0), MultiPoly::one())]);
        assert_eq!(schur_to_chern(&e), MultiPoly::var(Var::C1));
        let e = SchurExpansion::from_terms([(SchurIndex::new(1, 1), MultiPoly::one())]);
        assert_eq!(schur_to_chern(&e), MultiPoly::var(Var::C2));
    }

    #[test]
    fn asymmetric_rejected() {
        assert_eq!(schur_expand(&a()), Err(Error::NotSymmetric("a", "b")));
    }

    #[test]
    fn complete_h_small() {
        let e = complete_h_expand(&[1, 1]);
        assert_eq!(e.get(SchurIndex::new(2, 0)), Some(&int(1)));
        assert_eq!(e.get(SchurIndex::new(1, 1)), Some(&int(1)));
        let e = complete_h_expand(&[2]);
        assert_eq!(e.len(), 1);
        assert_eq!(
            complete_h_expand(&[1, 1, 1, 1]).get(SchurIndex::new(2, 2)),
            Some(&int(2))
        );
    }
}
