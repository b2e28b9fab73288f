//! Plücker numbers `Pl_{lambda;i}(d)` read off the Schur coefficients of
//! `[Y_lambda(d)]`, and the closed formulas that predict them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::crs::{crs_class, euler_pol};
use crate::error::{Error, Result};
use crate::exactpoly::{int, MultiPoly, Rational, UniPoly};
use crate::symfunc::{
    binomial, kostka, schur_expand, stirling_first, Partition, SchurExpansion, SchurIndex,
};

/// `Pl_{lambda;i}(d)` with `i = |lambda~| - 2j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerEntry {
    pub j: u32,
    pub i: u32,
    pub poly: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerTable {
    partition: Partition,
    entries: Vec<PluckerEntry>,
}

impl PluckerTable {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Entries ordered by `j`, so `i` decreases from `|lambda~|`.
    pub fn entries(&self) -> &[PluckerEntry] {
        &self.entries
    }

    pub fn by_i(&self, i: u32) -> Option<&UniPoly> {
        self.entries.iter().find(|e| e.i == i).map(|e| &e.poly)
    }

    pub fn by_j(&self, j: u32) -> Option<&UniPoly> {
        self.entries.get(j as usize).map(|e| &e.poly)
    }

    /// Parity of `i`, integer values on `[-|lambda|, 2|lambda| + 1]` and
    /// non-negativity on `[|lambda|, |lambda| + window]`.
    pub fn invariant_violations(&self, window: u32) -> Vec<String> {
        let codim = self.partition.codim();
        let w = self.partition.weight() as i64;
        let mut out = Vec::new();
        for e in &self.entries {
            if e.i % 2 != codim % 2 {
                out.push(format!("i = {} has the wrong parity", e.i));
            }
            if !e.poly.is_integer_valued_on(-w..=2 * w + 1) {
                out.push(format!("Pl[{}] is not integer-valued", e.i));
            }
            if !e.poly.is_nonnegative_on(w..=w + window as i64) {
                out.push(format!(
                    "Pl[{}] is negative on [{w}, {}]",
                    e.i,
                    w + window as i64
                ));
            }
        }
        out
    }
}

/// All Plücker polynomials of `lambda`; `Pl_{lambda;|lambda~|-2j}` is the
/// coefficient of `s_{|lambda~|-j, j}`.
pub fn plucker_table(lambda: &Partition) -> Result<PluckerTable> {
    let class = crs_class(lambda)?;
    let codim = lambda.codim();
    let entries = (0..=codim / 2)
        .map(|j| PluckerEntry {
            j,
            i: codim - 2 * j,
            poly: class.coefficient(codim - j, j),
        })
        .collect();
    Ok(PluckerTable {
        partition: lambda.clone(),
        entries,
    })
}

/// `d (d-1) ... (d - |lambda| + 1) / prod e_i!`, the count through a
/// generic point.
pub fn plucker_point(lambda: &Partition) -> Result<UniPoly> {
    lambda.ensure_crs()?;
    let roots: Vec<i64> = (0..lambda.weight() as i64).collect();
    let c = Rational::new(BigInt::one(), BigInt::from(lambda.aut_factor()));
    Ok(UniPoly::from_roots(c, &roots))
}

/// Predicted `d`-degree of `Pl_{lambda;|lambda~|-2j}`.
pub fn predicted_degree(lambda: &Partition, j: u32) -> u32 {
    let w = lambda.weight();
    let codim = lambda.codim();
    let l1 = lambda.largest().unwrap_or(0);
    // the sum of (lambda_i - 1) over the non-largest parts; never negative
    let threshold = codim + 1 - l1;
    if j <= threshold {
        w
    } else {
        w - (j - threshold)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub j: u32,
    pub expected: u32,
    pub actual: Option<usize>,
}

/// Predicted against actual degrees; a disagreement is an error.
pub fn degree_table(lambda: &Partition) -> Result<Vec<DegreeRow>> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition(
            "the empty partition has no lines".into(),
        ));
    }
    let table = plucker_table(lambda)?;
    let mut rows = Vec::new();
    for e in table.entries() {
        let expected = predicted_degree(lambda, e.j);
        let actual = e.poly.degree();
        if actual != Some(expected as usize) {
            return Err(Error::DegreeMismatch {
                partition: lambda.to_string(),
                j: e.j,
                expected,
                actual,
            });
        }
        rows.push(DegreeRow {
            j: e.j,
            expected,
            actual,
        });
    }
    Ok(rows)
}

/// `K_{(|lambda~|-j, j), lambda~} / prod e_i!`, the predicted coefficient of
/// `d^|lambda|` in `Pl_{lambda;|lambda~|-2j}`.
pub fn asymptotic_plucker(lambda: &Partition, j: u32) -> Result<Rational> {
    lambda.ensure_crs()?;
    let codim = lambda.codim();
    if j > codim / 2 {
        return Err(Error::OutOfRange(format!("j = {j} exceeds {}", codim / 2)));
    }
    let k = kostka(SchurIndex::new(codim - j, j), lambda.reduction().parts());
    Ok(Rational::new(
        BigInt::from(k),
        BigInt::from(lambda.aut_factor()),
    ))
}

/// The asymptotic number for the smallest admissible `i` vanishes exactly
/// when `lambda_1 >= |lambda~|/2 + 2`.
pub fn lowest_apl_vanishes(lambda: &Partition) -> bool {
    2 * lambda.largest().unwrap_or(0) >= lambda.codim() + 4
}

fn stir(n: u32, k: u32) -> BigInt {
    BigInt::from(stirling_first(n, k))
}

fn sign(e: u32) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Coefficient of `d^(m-k) s_{m-i-1,i}` in `[Y_m(d)]`, for `m >= 2i+1` and
/// `i <= k < m`.
pub fn mflex_coefficient(m: u32, i: u32, k: u32) -> Result<BigInt> {
    if m < 2 * i + 1 || k < i || k >= m {
        return Err(Error::OutOfRange(format!(
            "(m, i, k) = ({m}, {i}, {k}) needs m >= 2i+1 and i <= k < m"
        )));
    }
    let st = stir(m, m - k);
    let first = sign(k + i) * binomial(k as i64, i as i64);
    if k < m - i {
        Ok(first * st)
    } else {
        let second = sign(k + m - i) * binomial(k as i64, (m - i) as i64);
        Ok((first - second) * st)
    }
}

/// The coefficient of `s_{m-i-1,i}` in `[Y_m(d)]`, assembled from
/// [`mflex_coefficient`].
pub fn mflex_polynomial(m: u32, i: u32) -> Result<UniPoly> {
    if m < 2 * i + 1 {
        return Err(Error::OutOfRange(format!("m = {m} < 2i+1 for i = {i}")));
    }
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    for k in i..m {
        coeffs[(m - k) as usize] = Rational::from_integer(mflex_coefficient(m, i, k)?);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `Pl_m(d)` for odd `m = 2n - 3`:
/// `sum_{u=1}^{n-1} (-1)^(u+n+1) stir(m, u) binom(m-u+1, n-1) d^u`.
pub fn plm_polynomial(m: u32) -> Result<UniPoly> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "m = {m} must be odd and at least 3"
        )));
    }
    let n = (m + 3) / 2;
    let mut coeffs = vec![Rational::zero(); n as usize];
    for u in 1..n {
        let c = sign(u + n + 1) * stir(m, u) * binomial((m - u + 1) as i64, (n - 1) as i64);
        coeffs[u as usize] = Rational::from_integer(c);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

fn hyperflex_sum(n: u32, extra_power: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let d = 2 * n - 3;
    let dd = BigInt::from(d);
    let mut total = BigInt::zero();
    for u in 1..n {
        total += sign(u + n + 1)
            * stir(d, u)
            * binomial((d - u + 1) as i64, (n - 1) as i64)
            * num_traits::pow(dd.clone(), (u + extra_power) as usize);
    }
    Ok(total)
}

/// Lines meeting a generic degree `2n-3` hypersurface in `P(C^n)` in a
/// single point.
pub fn hyperflex_count(n: u32) -> Result<BigInt> {
    hyperflex_sum(n, 0)
}

/// Lines on a generic degree `2n-3` hypersurface in `P(C^(n+1))`, by the
/// closed sum.
pub fn lines_on_hypersurface(n: u32) -> Result<BigInt> {
    hyperflex_sum(n, 1)
}

/// The same count as the `s_{n-1,n-1}` coefficient of `e(Pol^d(C^2))`.
pub fn lines_on_hypersurface_euler(n: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let e = schur_expand(&euler_pol(2 * n - 3))?;
    let c = e
        .get(SchurIndex::new(n - 1, n - 1))
        .and_then(MultiPoly::as_constant)
        .unwrap_or_else(Rational::zero);
    Ok(c.to_integer())
}

/// Schur coefficients `u_j` of `e(Pol^{d0})` and `v_j` of `[Y_{d0}(d0)]`.
pub fn euler_schur_coefficients(d0: u32) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if d0 < 2 {
        return Err(Error::OutOfRange(format!("d0 = {d0} must be at least 2")));
    }
    let e: SchurExpansion<Rational> = schur_expand(&euler_pol(d0))?
        .to_rational()
        .expect("numeric coefficients");
    let y = crate::crs::crs_class_at(&Partition::crs(vec![d0])?, d0 as i64)?;
    let u = (0..=d0.div_ceil(2))
        .map(|j| {
            e.get(SchurIndex::new(d0 + 1 - j, j))
                .cloned()
                .unwrap_or_default()
        })
        .collect();
    let v = (0..=(d0 - 1) / 2)
        .map(|j| {
            y.get(SchurIndex::new(d0 - 1 - j, j))
                .cloned()
                .unwrap_or_default()
        })
        .collect();
    Ok((u, v))
}

/// `u_0 = 0` and `u_{j+1} = d0 v_j` for every `j`.
pub fn euler_schur_relation(d0: u32) -> Result<bool> {
    let (u, v) = euler_schur_coefficients(d0)?;
    let dd = int(d0 as i64);
    let shifted = v.iter().enumerate().all(|(j, vj)| u[j + 1] == vj * &dd);
    Ok(u[0].is_zero() && shifted)
}

/// `Pl_{(2n-3)}` evaluated at `d = 2n - 3` from the table route.
pub fn hyperflex_from_table(n: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let m = 2 * n - 3;
    let table = plucker_table(&Partition::crs(vec![m])?)?;
    let poly = table.by_i(0).expect("odd m has an i = 0 entry");
    Ok(poly
        .eval_integer(m as i64)
        .expect("Plücker numbers are integers"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::crs(parts.to_vec()).unwrap()
    }

    #[test]
    fn tables() {
        let t = plucker_table(&p(&[2])).unwrap();
        assert_eq!(t.by_i(1), Some(&UniPoly::from_roots(int(1), &[0, 1])));
        let t = plucker_table(&p(&[4])).unwrap();
        assert_eq!(
            t.by_i(1),
            Some(&(&UniPoly::from_roots(int(2), &[0, 3]) * &UniPoly::from_ints(&[-2, 3])))
        );
        assert_eq!(t.by_i(3), Some(&UniPoly::from_roots(int(1), &[0, 1, 2, 3])));
    }

    #[test]
    fn point_counts() {
        for lambda in Partition::crs_up_to(7) {
            if lambda.is_empty() {
                continue;
            }
            let t = plucker_table(&lambda).unwrap();
            assert_eq!(
                t.by_j(0),
                Some(&plucker_point(&lambda).unwrap()),
                "{lambda}"
            );
        }
        assert_eq!(
            plucker_point(&p(&[3, 2])).unwrap(),
            UniPoly::from_roots(int(1), &[0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn degrees() {
        let rows = degree_table(&p(&[3])).unwrap();
        let deg: Vec<u32> = rows.iter().map(|r| r.expected).collect();
        assert_eq!(deg, vec![3, 2]);
        assert_eq!(
            (0..6)
                .map(|j| predicted_degree(&p(&[10, 2, 2]), j))
                .collect::<Vec<_>>(),
            vec![14, 14, 14, 13, 12, 11]
        );
    }

    #[test]
    fn asymptotics() {
        assert_eq!(
            asymptotic_plucker(&p(&[2, 2, 2, 2]), 2).unwrap(),
            rat(1, 12)
        );
        assert_eq!(asymptotic_plucker(&p(&[3, 3]), 2).unwrap(), rat(1, 2));
        assert_eq!(asymptotic_plucker(&p(&[3, 3, 3]), 3).unwrap(), rat(1, 6));
        assert_eq!(asymptotic_plucker(&p(&[4]), 1).unwrap(), rat(0, 1));
        assert!(lowest_apl_vanishes(&p(&[4])));
        assert!(!lowest_apl_vanishes(&p(&[2, 2])));
    }

    #[test]
    fn mflex() {
        let c: Vec<i64> = (1..4)
            .map(|k| i64::try_from(mflex_coefficient(4, 1, k).unwrap()).unwrap())
            .collect();
        assert_eq!(c, vec![6, -22, 12]);
        assert_eq!(
            mflex_polynomial(2, 0).unwrap(),
            UniPoly::from_ints(&[0, -1, 1])
        );
        assert_eq!(
            mflex_polynomial(3, 1).unwrap(),
            UniPoly::from_ints(&[0, -6, 3])
        );
        assert!(mflex_coefficient(3, 2, 2).is_err());
        assert_eq!(plm_polynomial(3).unwrap(), UniPoly::from_ints(&[0, -6, 3]));
    }

    #[test]
    fn hyperflexes_and_lines() {
        assert_eq!(hyperflex_count(3).unwrap(), BigInt::from(9));
        assert_eq!(hyperflex_count(4).unwrap(), BigInt::from(575));
        assert_eq!(lines_on_hypersurface(3).unwrap(), BigInt::from(27));
        assert_eq!(lines_on_hypersurface(4).unwrap(), BigInt::from(2875));
        assert_eq!(lines_on_hypersurface_euler(4).unwrap(), BigInt::from(2875));
        assert_eq!(hyperflex_from_table(4).unwrap(), BigInt::from(575));
        assert!(euler_schur_relation(5).unwrap());
    }
}
