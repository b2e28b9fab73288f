//! The universal class `[Y_lambda(d)]` of a coincident root stratum, as a
//! Schur expansion whose coefficients are polynomials in `d`.
//!
//! The main route is the peeling recursion
//!
//! ```text
//! [Y_lambda(d)] = (1/e_m) D( [Y_lambda'(d - m)]_q * prod_{i<m} (i a + (d - i) b) ),
//! ```
//!
//! where `m` is the largest part, `lambda'` is `lambda` with one copy of `m`
//! removed, `q = m / (d - m)`, `_q` is the twist `a -> (1+q) a, b -> b + q a`
//! and `D` is the divided difference. A second route runs the same recursion
//! with `d` fixed to an integer, and interpolation over integers rebuilds the
//! symbolic answer from it.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::{int, interpolate_d, DFrac, FracPoly, MultiPoly, Rational, UniPoly, Var};
use crate::symfunc::{
    complete_h_expand, divided_difference, schur_expand, schur_polynomial, Partition,
    SchurExpansion, SchurIndex,
};

/// `[Y_lambda(d)]` in the Schur basis `s_{k,l}(a, b)`, coefficients in `Q[d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrsClass {
    partition: Partition,
    coefficients: SchurExpansion<UniPoly>,
}

impl CrsClass {
    pub fn new(partition: Partition, coefficients: SchurExpansion<UniPoly>) -> Self {
        Self {
            partition,
            coefficients,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn coefficients(&self) -> &SchurExpansion<UniPoly> {
        &self.coefficients
    }

    /// Coefficient of `s_{k,l}`; zero when absent.
    pub fn coefficient(&self, k: u32, l: u32) -> UniPoly {
        self.coefficients
            .get(SchurIndex::new(k, l))
            .cloned()
            .unwrap_or_else(UniPoly::zero)
    }

    /// The class as a polynomial in `a, b, d`.
    pub fn to_roots(&self) -> MultiPoly {
        unipoly_schur_to_roots(&self.coefficients)
    }

    pub fn evaluate_d(&self, k: i64) -> SchurExpansion<Rational> {
        let mut out = SchurExpansion::new();
        for (i, c) in self.coefficients.iter() {
            let v = c.eval_int(k);
            if !v.is_zero() {
                out.insert(*i, v);
            }
        }
        out
    }

    /// The coefficient of `d^|lambda|` in every Schur coefficient.
    pub fn leading_slice(&self) -> SchurExpansion<Rational> {
        let top = self.partition.weight() as usize;
        let mut out = SchurExpansion::new();
        for (i, c) in self.coefficients.iter() {
            let v = c.coeff(top);
            if !v.is_zero() {
                out.insert(*i, v);
            }
        }
        out
    }

    /// Drops every `s_{k,l}` with `k > n - 2`, which vanish on `Gr_2(C^n)`.
    pub fn truncate(&self, n: u32) -> SchurExpansion<UniPoly> {
        self.coefficients.filter(|i| i.k + 2 <= n)
    }

    /// Structural checks: homogeneity, the `d`-degree bound, exact degree of
    /// the `s_{|lambda~|}` coefficient and integer values at integers.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let codim = self.partition.codim();
        let w = self.partition.weight();
        for (i, c) in self.coefficients.iter() {
            if i.degree() != codim {
                out.push(format!("{i} has degree {} != {codim}", i.degree()));
            }
            if c.degree().unwrap_or(0) > w as usize {
                out.push(format!("{i} coefficient has d-degree above {w}"));
            }
            let lo = -(w as i64);
            let hi = 2 * w as i64 + 1;
            if !c.is_integer_valued_on(lo..=hi) {
                out.push(format!(
                    "{i} coefficient is not integer-valued on [{lo}, {hi}]"
                ));
            }
        }
        let top = self.coefficient(codim, 0);
        if top.degree() != Some(w as usize) {
            out.push(format!(
                "s[{codim}] coefficient has d-degree {:?}, expected {w}",
                top.degree()
            ));
        }
        out
    }
}

impl fmt::Display for CrsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficients)
    }
}

pub(crate) fn unipoly_schur_to_roots(e: &SchurExpansion<UniPoly>) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (i, c) in e.iter() {
        out += &(&MultiPoly::from_unipoly(c, Var::D) * &schur_polynomial(*i));
    }
    out
}

/// `prod_{i=0}^{m-1} (i a + (d - i) b)`, the equivariant Euler class of the
/// space of `m`-jets.
pub fn weighted_product(m: u32) -> MultiPoly {
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    let d = MultiPoly::var(Var::D);
    (0..m as i64).fold(MultiPoly::one(), |acc, i| {
        let factor = &a.scale(&int(i)) + &(&(&d - &MultiPoly::from_int(i)) * &b);
        &acc * &factor
    })
}

/// `weighted_product(m)` at `d = d0`.
pub fn weighted_product_at(m: u32, d0: i64) -> MultiPoly {
    weighted_product(m).eval_var(Var::D, &int(d0))
}

fn twist_bindings(q: FracPoly) -> HashMap<Var, FracPoly> {
    let a = FracPoly::var(Var::A);
    let b = FracPoly::var(Var::B);
    let qa = &q * &a;
    let mut bind = HashMap::new();
    bind.insert(Var::A, &a + &qa);
    bind.insert(Var::B, &b + &qa);
    bind
}

/// `p(a + q a, b + q a)` for a scalar `q` that may depend on `d`.
pub fn twist(p: &FracPoly, q: &DFrac) -> FracPoly {
    if q.is_zero() {
        return p.clone();
    }
    p.substitute(&twist_bindings(FracPoly::from_dfrac(q)))
}

/// `p(a + q a, b + q a)` for a rational `q`.
pub fn twist_rational(p: &MultiPoly, q: &Rational) -> MultiPoly {
    if q.is_zero() {
        return p.clone();
    }
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    let qa = a.scale(q);
    let mut bind = HashMap::new();
    bind.insert(Var::A, &a + &qa);
    bind.insert(Var::B, &b + &qa);
    p.substitute(&bind)
}

/// Numerator of `alpha(d - m)` twisted by `q = m / (d - m)`.
///
/// For `alpha` homogeneous of degree `c` in `a, b` the twist equals
/// `alpha(d - m)(d a, (d - m) b + m a) / (d - m)^c`; this returns the
/// numerator, so the caller owns the division by `(d - m)^c`.
pub(crate) fn twisted_numerator(alpha: &MultiPoly, m: u32) -> MultiPoly {
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    let d = MultiPoly::var(Var::D);
    let dm = &d - &MultiPoly::from_int(m as i64);
    let mut bind = HashMap::new();
    bind.insert(Var::D, dm.clone());
    bind.insert(Var::A, &d * &a);
    bind.insert(Var::B, &(&dm * &b) + &a.scale(&int(m as i64)));
    alpha.substitute(&bind)
}

fn cache() -> &'static RwLock<HashMap<Partition, Arc<CrsClass>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<CrsClass>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Forgets every memoized class.
pub fn clear_cache() {
    cache().write().expect("cache lock").clear();
}

/// `[Y_lambda(d)]` by the peeling recursion on the largest part; memoized.
pub fn crs_class(lambda: &Partition) -> Result<Arc<CrsClass>> {
    lambda.ensure_crs()?;
    if let Some(c) = cache().read().expect("cache lock").get(lambda) {
        return Ok(c.clone());
    }
    let computed = match lambda.largest() {
        None => CrsClass::new(
            Partition::empty(),
            SchurExpansion::from_terms([(SchurIndex::new(0, 0), UniPoly::one())]),
        ),
        Some(m) => peel(lambda, m)?,
    };
    let mut guard = cache().write().expect("cache lock");
    Ok(guard
        .entry(lambda.clone())
        .or_insert_with(|| Arc::new(computed))
        .clone())
}

/// The same recursion, peeling the part `m` instead of the largest one.
pub fn crs_class_peeling(lambda: &Partition, m: u32) -> Result<CrsClass> {
    lambda.ensure_crs()?;
    peel(lambda, m)
}

fn peel(lambda: &Partition, m: u32) -> Result<CrsClass> {
    let rest = lambda
        .without_part(m)
        .ok_or_else(|| Error::InvalidPartition(format!("{m} is not a part of {lambda}")))?;
    let e_m = lambda.multiplicity(m);
    let prev = crs_class(&rest)?;
    let num = &twisted_numerator(&prev.to_roots(), m) * &weighted_product(m);
    let dd = divided_difference(&num).scale(&Rational::new(1.into(), e_m.into()));
    let den = UniPoly::linear_root(m as i64).pow(rest.codim());
    let poly = dd
        .exact_div_d(&den)
        .ok_or_else(|| Error::PolynomialityViolation {
            context: format!("class of {lambda}"),
            denominator: den.to_string(),
        })?;
    let coefficients = schur_expand(&poly)?
        .to_unipoly()
        .expect("class depends on a, b, d only");
    Ok(CrsClass::new(lambda.clone(), coefficients))
}

/// `[Y_lambda(d0)]` at an integer degree, by the recursion over `Q`.
pub fn crs_class_at(lambda: &Partition, d0: i64) -> Result<SchurExpansion<Rational>> {
    lambda.ensure_crs()?;
    if d0 < lambda.weight() as i64 {
        return Err(Error::DegreeTooSmall {
            d: d0,
            weight: lambda.weight(),
        });
    }
    let roots = class_at_roots(lambda, d0);
    Ok(schur_expand(&roots)?
        .to_rational()
        .expect("numeric coefficients"))
}

fn class_at_roots(lambda: &Partition, d0: i64) -> MultiPoly {
    let Some(m) = lambda.largest() else {
        return MultiPoly::one();
    };
    let rest = lambda.without_part(m).expect("largest part occurs");
    let e_m = lambda.multiplicity(m);
    let d1 = d0 - m as i64;
    let prev = class_at_roots(&rest, d1);
    // the empty class is 1, so its twist is trivial even when d1 = 0
    let twisted = if rest.is_empty() {
        prev
    } else {
        twist_rational(&prev, &Rational::new((m as i64).into(), d1.into()))
    };
    let num = &twisted * &weighted_product_at(m, d0);
    divided_difference(&num).scale(&Rational::new(1.into(), e_m.into()))
}

/// Rebuilds `[Y_lambda(d)]` by interpolating the integer route at
/// `d = |lambda| .. 2|lambda| + 1`; the last node is a consistency check.
pub fn crs_class_interpolated(lambda: &Partition) -> Result<CrsClass> {
    lambda.ensure_crs()?;
    let w = lambda.weight() as i64;
    let nodes: Vec<i64> = (w..=2 * w + 1).collect();
    let samples: Vec<(i64, SchurExpansion<Rational>)> = nodes
        .iter()
        .map(|&k| crs_class_at(lambda, k).map(|e| (k, e)))
        .collect::<Result<_>>()?;
    let mut indices: HashSet<SchurIndex> = HashSet::new();
    for (_, e) in &samples {
        indices.extend(e.iter().map(|(i, _)| *i));
    }
    let mut out = SchurExpansion::new();
    for idx in indices {
        let pts: Vec<(i64, Rational)> = samples
            .iter()
            .map(|(k, e)| (*k, e.get(idx).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        let p = interpolate_d(&pts, w as usize)?;
        if !p.is_zero() {
            out.insert(idx, p);
        }
    }
    Ok(CrsClass::new(lambda.clone(), out))
}

/// `[Y_m(d)] = D(prod_{i<m} (i a + (d - i) b))`, a single divided difference.
pub fn crs_m_closed(m: u32) -> Result<CrsClass> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("m = {m} must be at least 2")));
    }
    let coefficients = schur_expand(&divided_difference(&weighted_product(m)))?
        .to_unipoly()
        .expect("class depends on a, b, d only");
    Ok(CrsClass::new(Partition::crs(vec![m])?, coefficients))
}

/// `prod_{i=0}^{d0} (i a + (d0 - i) b)`, the Euler class of `Pol^{d0}(C^2)`.
pub fn euler_pol(d0: u32) -> MultiPoly {
    weighted_product(d0 + 1).eval_var(Var::D, &int(d0 as i64))
}

/// Checks `e(Pol^{d0}) = d0 ab [Y_{d0}(d0)]` in root form.
pub fn euler_identity_check(d0: u32) -> Result<bool> {
    if d0 < 2 {
        return Err(Error::OutOfRange(format!("d0 = {d0} must be at least 2")));
    }
    let lambda = Partition::crs(vec![d0])?;
    let class = crs_class_at(&lambda, d0 as i64)?;
    let roots = crate::symfunc::schur_to_roots(&class.map(|c| MultiPoly::constant(c.clone())));
    let rhs = &roots * &MultiPoly::monomial(d0 as i64, &[(Var::A, 1), (Var::B, 1)]);
    Ok(euler_pol(d0) == rhs)
}

/// `h_{lambda~}(a, b) / prod e_i!` in the Schur basis, the predicted
/// `d^|lambda|` part of `[Y_lambda(d)]`.
pub fn leading_term(lambda: &Partition) -> Result<SchurExpansion<Rational>> {
    lambda.ensure_crs()?;
    let scale = Rational::new(1.into(), lambda.aut_factor().into());
    let h = complete_h_expand(lambda.reduction().parts());
    Ok(h.map(|c| c * &scale))
}

/// Evaluates the coefficients of a Schur expansion at `d = k`.
pub fn evaluate_expansion(e: &SchurExpansion<UniPoly>, k: i64) -> SchurExpansion<Rational> {
    let mut out = SchurExpansion::new();
    for (i, c) in e.iter() {
        let v = c.eval_int(k);
        if !v.is_zero() {
            out.insert(*i, v);
        }
    }
    out
}
