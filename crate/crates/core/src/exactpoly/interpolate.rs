use std::collections::HashSet;

use num_traits::Zero;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Lagrange interpolation through integer nodes.
///
/// The first `degree_bound + 1` samples determine the interpolant; every
/// further sample must lie on it.
pub fn interpolate_d(samples: &[(i64, Rational)], degree_bound: usize) -> Result<UniPoly> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: samples.len(),
        });
    }
    let mut seen = HashSet::new();
    for (k, _) in samples {
        if !seen.insert(*k) {
            return Err(Error::DuplicateNode(*k));
        }
    }
    let (basis, extra) = samples.split_at(needed);
    let mut result = UniPoly::zero();
    for (i, (xi, yi)) in basis.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = UniPoly::constant(yi.clone());
        let mut denom = Rational::from_integer(1.into());
        for (j, (xj, _)) in basis.iter().enumerate() {
            if i != j {
                term = &term * &UniPoly::linear_root(*xj);
                denom *= Rational::from_integer((xi - xj).into());
            }
        }
        result = &result + &term.scale(&denom.recip());
    }
    for (k, v) in extra {
        if &result.eval_int(*k) != v {
            return Err(Error::InconsistentSamples(*k));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples(pts: &[(i64, i64)]) -> Vec<(i64, Rational)> {
        pts.iter()
            .map(|&(k, v)| (k, Rational::from_integer(v.into())))
            .collect()
    }

    #[test]
    fn constant() {
        let p = interpolate_d(&samples(&[(0, 5), (1, 5)]), 0).unwrap();
        assert_eq!(p, UniPoly::from_int(5));
    }

    #[test]
    fn quadratic() {
        let p = interpolate_d(&samples(&[(2, 2), (3, 6), (4, 12)]), 2).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn cubic_exceeds_bound() {
        let err = interpolate_d(&samples(&[(0, 0), (1, 0), (2, 0), (3, 1)]), 2).unwrap_err();
        assert_eq!(err, Error::InconsistentSamples(3));
    }

    #[test]
    fn too_few_or_duplicate() {
        assert!(matches!(
            interpolate_d(&samples(&[(0, 1)]), 1),
            Err(Error::InsufficientSamples { needed: 2, got: 1 })
        ));
        assert_eq!(
            interpolate_d(&samples(&[(0, 1), (0, 1)]), 1),
            Err(Error::DuplicateNode(0))
        );
    }
}
