use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts.
///
/// For a coincident-root type every part is at least 2; use
/// [`Partition::crs`] or [`Partition::ensure_crs`] at those boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// A coincident-root partition: every part at least 2.
    pub fn crs(parts: Vec<u32>) -> Result<Self> {
        let p = Self::new(parts)?;
        p.ensure_crs()?;
        Ok(p)
    }

    pub fn ensure_crs(&self) -> Result<()> {
        if self.parts.iter().any(|&p| p < 2) {
            return Err(Error::InvalidPartition(format!(
                "{self}: coincident root types have parts >= 2"
            )));
        }
        Ok(())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// `e_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Distinct part values in decreasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.multiplicities().into_keys().collect();
        v.reverse();
        v
    }

    /// The reduction `(lambda_1 - 1, ..., lambda_k - 1)` with zero parts dropped.
    pub fn reduction(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > 1)
                .map(|p| p - 1)
                .collect(),
        }
    }

    /// `|reduction|`, the codimension of the stratum.
    pub fn codim(&self) -> u32 {
        self.parts.iter().map(|p| p.saturating_sub(1)).sum()
    }

    /// `prod e_i!`.
    pub fn aut_factor(&self) -> BigUint {
        self.multiplicities()
            .values()
            .map(|&e| (1..=e).map(BigUint::from).product::<BigUint>())
            .fold(BigUint::one(), |acc, f| acc * f)
    }

    /// The partition with one copy of `m` removed.
    pub fn without_part(&self, m: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == m)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` without parts equal to 1.
    pub fn crs_of(n: u32) -> Vec<Partition> {
        Self::all_of(n)
            .into_iter()
            .filter(|p| p.parts.iter().all(|&x| x >= 2))
            .collect()
    }

    /// Partitions without 1's of weight at most `n`, the empty one included.
    pub fn crs_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Self::crs_of).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accessors() {
        let p = Partition::new(vec![2, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 2]);
        assert_eq!(p.weight(), 7);
        assert_eq!(p.codim(), 4);
        assert_eq!(p.reduction().parts(), &[2, 1, 1]);
        assert_eq!(p.multiplicity(2), 2);
        assert_eq!(p.aut_factor(), BigUint::from(2u32));
        assert_eq!(p.without_part(2).unwrap().parts(), &[3, 2]);
        assert_eq!(p.to_string(), "(3,2,2)");
    }

    #[test]
    fn crs_validation() {
        assert!(Partition::crs(vec![3, 1]).is_err());
        assert!(Partition::new(vec![0]).is_err());
        assert!(Partition::crs(vec![]).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::all_of(8).len(), 22);
        // p(n) - p(n-1) partitions of n without ones
        let counts: Vec<usize> = (0..=9).map(|n| Partition::crs_of(n).len()).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 2, 2, 4, 4, 7, 8]);
        assert_eq!(Partition::crs_up_to(9).len(), 30);
    }
}
